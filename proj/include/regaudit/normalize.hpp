// Copyright (c) the regaudit authors.
// Licensed under the Apache 2.0 License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "regaudit/detail/strings.hpp"
#include "regaudit/errors.hpp"

namespace regaudit {

namespace detail {

inline std::optional<std::vector<std::uint32_t>> utf8_codepoints(std::string_view s) {
  std::vector<std::uint32_t> cps;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    std::size_t len;
    std::uint32_t cp;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return std::nullopt;
    }
    if (i + len > s.size()) return std::nullopt;
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char cc = static_cast<unsigned char>(s[i + k]);
      if ((cc & 0xC0) != 0x80) return std::nullopt;
      cp = (cp << 6) | (cc & 0x3F);
    }
    if ((len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) || (len == 4 && cp < 0x10000) ||
        (cp >= 0xD800 && cp <= 0xDFFF) || cp > 0x10FFFF)
      return std::nullopt;
    cps.push_back(cp);
    i += len;
  }
  return cps;
}

// RFC 3492 Punycode encoding of one label (without the "xn--" prefix).
inline std::optional<std::string> punycode_encode(const std::vector<std::uint32_t>& input) {
  constexpr std::uint32_t kBase = 36, kTmin = 1, kTmax = 26, kSkew = 38, kDamp = 700;
  constexpr std::uint32_t kInitialBias = 72, kInitialN = 128;
  auto adapt = [](std::uint32_t delta, std::uint32_t numpoints, bool first) {
    delta = first ? delta / kDamp : delta / 2;
    delta += delta / numpoints;
    std::uint32_t k = 0;
    while (delta > ((kBase - kTmin) * kTmax) / 2) {
      delta /= kBase - kTmin;
      k += kBase;
    }
    return k + (((kBase - kTmin + 1) * delta) / (delta + kSkew));
  };
  auto digit_char = [](std::uint32_t d) -> char {
    return d < 26 ? static_cast<char>('a' + d) : static_cast<char>('0' + d - 26);
  };

  std::string out;
  std::uint32_t n = kInitialN, delta = 0, bias = kInitialBias;
  std::uint32_t basic = 0;
  for (std::uint32_t cp : input) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
      ++basic;
    }
  }
  std::uint32_t handled = basic;
  if (basic > 0) out.push_back('-');
  while (handled < input.size()) {
    std::uint32_t m = 0x7FFFFFFF;
    for (std::uint32_t cp : input)
      if (cp >= n && cp < m) m = cp;
    if (m - n > (0x7FFFFFFF - delta) / (handled + 1)) return std::nullopt;  // overflow
    delta += (m - n) * (handled + 1);
    n = m;
    for (std::uint32_t cp : input) {
      if (cp < n && ++delta == 0) return std::nullopt;
      if (cp == n) {
        std::uint32_t q = delta;
        for (std::uint32_t k = kBase;; k += kBase) {
          std::uint32_t t = k <= bias ? kTmin : (k >= bias + kTmax ? kTmax : k - bias);
          if (q < t) break;
          out.push_back(digit_char(t + (q - t) % (kBase - t)));
          q = (q - t) / (kBase - t);
        }
        out.push_back(digit_char(q));
        bias = adapt(delta, handled + 1, handled == basic);
        delta = 0;
        ++handled;
      }
    }
    ++delta;
    ++n;
  }
  return out;
}

inline bool valid_label_ascii(std::string_view label) {
  if (label.empty() || label.size() > 63) return false;
  for (char c : label) {
    bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Canonical hostname form: lowercase, trailing dot stripped, U-labels
/// converted to A-labels. Throws InvalidHostname on malformed input.
inline std::string normalize_fqdn(std::string_view name) {
  std::string_view trimmed = detail::trim(name);
  if (trimmed.empty()) throw InvalidHostname(std::string(name));
  for (char c : trimmed) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc < 0x80 && (std::isspace(uc) || std::iscntrl(uc)))
      throw InvalidHostname(std::string(name));
  }
  std::string work(trimmed);
  if (work.back() == '.') work.pop_back();
  if (work.empty() || work.front() == '.' || work.find("..") != std::string::npos)
    throw InvalidHostname(std::string(name));

  std::string out;
  for (std::string_view label : detail::split(work, '.')) {
    bool ascii = true;
    for (char c : label)
      if (static_cast<unsigned char>(c) >= 0x80) ascii = false;
    std::string alabel;
    if (ascii) {
      alabel = detail::to_lower(label);
    } else {
      auto cps = detail::utf8_codepoints(label);
      if (!cps) throw InvalidHostname(std::string(name));
      for (auto& cp : *cps)
        if (cp < 0x80 && cp >= 'A' && cp <= 'Z') cp += 'a' - 'A';
      auto encoded = detail::punycode_encode(*cps);
      if (!encoded) throw InvalidHostname(std::string(name));
      alabel = "xn--" + *encoded;
    }
    if (!detail::valid_label_ascii(alabel)) throw InvalidHostname(std::string(name));
    if (!out.empty()) out.push_back('.');
    out += alabel;
  }
  return out;
}

inline std::optional<std::string> try_normalize_fqdn(std::string_view name) {
  try {
    return normalize_fqdn(name);
  } catch (const InvalidHostname&) {
    return std::nullopt;
  }
}

/// Canonical email form: domain part lowercased and FQDN-normalized, local
/// part preserved byte for byte apart from surrounding whitespace.
inline std::string normalize_email(std::string_view addr) {
  std::string_view trimmed = detail::trim(addr);
  std::size_t at = trimmed.find('@');
  if (at == std::string_view::npos || at != trimmed.rfind('@'))
    throw InvalidEmail(std::string(addr));
  std::string_view local = trimmed.substr(0, at);
  std::string_view domain = trimmed.substr(at + 1);
  if (local.empty() || domain.empty()) throw InvalidEmail(std::string(addr));
  for (char c : local) {
    unsigned char uc = static_cast<unsigned char>(c);
    if (uc < 0x80 && (std::isspace(uc) || std::iscntrl(uc)))
      throw InvalidEmail(std::string(addr));
  }
  std::string norm_domain;
  try {
    norm_domain = normalize_fqdn(domain);
  } catch (const InvalidHostname&) {
    throw InvalidEmail(std::string(addr));
  }
  return std::string(local) + "@" + norm_domain;
}

inline std::optional<std::string> try_normalize_email(std::string_view addr) {
  try {
    return normalize_email(addr);
  } catch (const InvalidEmail&) {
    return std::nullopt;
  }
}

/// The normalized domain to the right of the last "@".
inline std::string email_domain_part(std::string_view addr) {
  std::string_view trimmed = detail::trim(addr);
  std::size_t at = trimmed.rfind('@');
  if (at == std::string_view::npos || at + 1 >= trimmed.size() || at == 0)
    throw InvalidEmail(std::string(addr));
  try {
    return normalize_fqdn(trimmed.substr(at + 1));
  } catch (const InvalidHostname&) {
    throw InvalidEmail(std::string(addr));
  }
}

}  // namespace regaudit
