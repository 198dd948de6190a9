// Copyright (c) the regaudit authors.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "regaudit/detail/strings.hpp"
#include "regaudit/errors.hpp"
#include "regaudit/time.hpp"

namespace regaudit {

enum class Protocol { Whois, Rdap };

enum class ServerSource { RdapBootstrap, IanaWhois, CuratedDb };

inline std::string_view to_string(Protocol p) {
  return p == Protocol::Whois ? "whois" : "rdap";
}

inline std::string_view to_string(ServerSource s) {
  switch (s) {
    case ServerSource::RdapBootstrap: return "rdap-bootstrap";
    case ServerSource::IanaWhois: return "iana-whois";
    case ServerSource::CuratedDb: return "curated-db";
  }
  return "?";
}

/// One queryable registration-data server. WHOIS locators are bare
/// hostnames (port 43 implied); RDAP locators are absolute http(s) base
/// URIs ending in exactly one "/". Use the factory functions, which
/// enforce those forms.
struct ServerEndpoint {
  Protocol protocol{Protocol::Whois};
  std::string locator;
  std::string query_flags;  // prepended to WHOIS queries, verbatim
  ServerSource source{ServerSource::CuratedDb};

  bool operator==(const ServerEndpoint&) const = default;
  auto operator<=>(const ServerEndpoint&) const = default;
};

inline ServerEndpoint make_whois_endpoint(std::string_view host, std::string_view flags,
                                          ServerSource source) {
  std::string_view h = detail::trim(host);
  if (h.empty() || h.find('/') != std::string_view::npos ||
      h.find(':') != std::string_view::npos || h.find(' ') != std::string_view::npos)
    throw InvalidHostname(std::string(host));
  ServerEndpoint ep;
  ep.protocol = Protocol::Whois;
  ep.locator = detail::to_lower(h);
  ep.query_flags = std::string(detail::trim(flags));
  ep.source = source;
  return ep;
}

inline ServerEndpoint make_rdap_endpoint(std::string_view uri, ServerSource source) {
  std::string_view u = detail::trim(uri);
  bool https = detail::starts_with(u, "https://");
  bool http = detail::starts_with(u, "http://");
  if ((!https && !http) || u.size() <= (https ? 8u : 7u))
    throw InvalidHostname(std::string(uri));
  std::string loc(u);
  while (!loc.empty() && loc.back() == '/') loc.pop_back();
  loc.push_back('/');
  ServerEndpoint ep;
  ep.protocol = Protocol::Rdap;
  ep.locator = loc;
  ep.query_flags.clear();
  ep.source = source;
  return ep;
}

enum class MissingReason { Absent, Unparsable, Redacted, InvalidType, PreEpoch };

inline std::string_view to_string(MissingReason r) {
  switch (r) {
    case MissingReason::Absent: return "absent";
    case MissingReason::Unparsable: return "unparsable";
    case MissingReason::Redacted: return "redacted";
    case MissingReason::InvalidType: return "invalid-type";
    case MissingReason::PreEpoch: return "pre-epoch";
  }
  return "?";
}

inline std::optional<MissingReason> missing_reason_from_string(std::string_view s) {
  if (s == "absent") return MissingReason::Absent;
  if (s == "unparsable") return MissingReason::Unparsable;
  if (s == "redacted") return MissingReason::Redacted;
  if (s == "invalid-type") return MissingReason::InvalidType;
  if (s == "pre-epoch") return MissingReason::PreEpoch;
  return std::nullopt;
}

/// A parsed field: either a present value or a missing-with-reason marker.
template <typename T>
class Field {
public:
  Field() : v_(MissingReason::Absent) {}

  static Field present(T value) {
    Field f;
    f.v_ = std::move(value);
    return f;
  }
  static Field missing(MissingReason reason) {
    Field f;
    f.v_ = reason;
    return f;
  }

  bool is_present() const { return std::holds_alternative<T>(v_); }
  const T& value() const { return std::get<T>(v_); }
  MissingReason reason() const { return std::get<MissingReason>(v_); }

  bool operator==(const Field&) const = default;

private:
  std::variant<MissingReason, T> v_;
};

/// The unified field model extracted from one registration record,
/// regardless of source protocol.
struct ParsedFields {
  Field<std::set<std::string>> nameservers;  // normalized FQDNs, nonempty when present
  Field<std::int64_t> iana_id;
  Field<std::string> registrar_name;
  Field<UtcInstant> created_at;
  Field<UtcInstant> expires_at;
  Field<std::set<std::string>> emails;  // normalized addresses, nonempty when present

  bool operator==(const ParsedFields&) const = default;
};

enum class FetchOutcome { Ok, Timeout, ConnectError, HttpError, Malformed };

inline std::string_view to_string(FetchOutcome o) {
  switch (o) {
    case FetchOutcome::Ok: return "ok";
    case FetchOutcome::Timeout: return "timeout";
    case FetchOutcome::ConnectError: return "connect-error";
    case FetchOutcome::HttpError: return "http-error";
    case FetchOutcome::Malformed: return "malformed";
  }
  return "?";
}

inline std::optional<FetchOutcome> fetch_outcome_from_string(std::string_view s) {
  if (s == "ok") return FetchOutcome::Ok;
  if (s == "timeout") return FetchOutcome::Timeout;
  if (s == "connect-error") return FetchOutcome::ConnectError;
  if (s == "http-error") return FetchOutcome::HttpError;
  if (s == "malformed") return FetchOutcome::Malformed;
  return std::nullopt;
}

/// One wire exchange, successful or not. `body` holds the raw bytes as
/// received; fetched_at is set for every attempt, including failures.
struct RawResponse {
  Protocol protocol{Protocol::Whois};
  ServerEndpoint server;
  std::string body;
  std::optional<int> http_status;  // RDAP only
  UtcInstant fetched_at{};
  FetchOutcome outcome{FetchOutcome::ConnectError};

  bool operator==(const RawResponse&) const = default;
};

enum class RecordLevel { Registry, Registrar, DeeperReferral };

inline RecordLevel level_for_depth(int depth) {
  if (depth <= 0) return RecordLevel::Registry;
  if (depth == 1) return RecordLevel::Registrar;
  return RecordLevel::DeeperReferral;
}

inline std::string_view to_string(RecordLevel l) {
  switch (l) {
    case RecordLevel::Registry: return "registry";
    case RecordLevel::Registrar: return "registrar";
    case RecordLevel::DeeperReferral: return "deeper-referral";
  }
  return "?";
}

/// One raw response plus provenance and its parsed field model.
/// depth 0 means the server came from bootstrap resolution (registry);
/// each referral hop increments it.
struct RegistrationRecord {
  std::string domain;
  Protocol protocol{Protocol::Whois};
  int depth{0};
  ServerEndpoint server;
  RawResponse raw;
  ParsedFields parsed;

  RecordLevel level() const { return level_for_depth(depth); }

  bool operator==(const RegistrationRecord&) const = default;
};

/// All records collected for one domain in one pass.
struct RecordBundle {
  std::string domain;
  std::vector<RegistrationRecord> records;
  UtcInstant collected_at{};
  std::chrono::seconds pairing_window{0};  // max - min fetched_at over successful records
  bool stale_pairing{false};

  bool operator==(const RecordBundle&) const = default;
};

inline std::chrono::seconds compute_pairing_window(const std::vector<RegistrationRecord>& records) {
  bool any = false;
  UtcInstant lo{}, hi{};
  for (const auto& r : records) {
    if (r.raw.outcome != FetchOutcome::Ok) continue;
    if (!any || r.raw.fetched_at < lo) lo = r.raw.fetched_at;
    if (!any || r.raw.fetched_at > hi) hi = r.raw.fetched_at;
    any = true;
  }
  return any ? std::chrono::duration_cast<std::chrono::seconds>(hi - lo)
             : std::chrono::seconds{0};
}

}  // namespace regaudit
