// Copyright (c) the regaudit authors.
// Licensed under the Apache 2.0 License.

#pragma once

#include <stdexcept>
#include <string>

namespace regaudit {

/// Base class for all regaudit errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class MalformedBootstrap : public Error {
public:
  explicit MalformedBootstrap(const std::string& what)
      : Error("malformed bootstrap document: " + what) {}
};

class MalformedLine : public Error {
public:
  MalformedLine(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

class InvalidDomainName : public Error {
public:
  explicit InvalidDomainName(const std::string& name)
      : Error("invalid domain name: \"" + name + "\"") {}
};

class InvalidHostname : public Error {
public:
  explicit InvalidHostname(const std::string& name)
      : Error("invalid hostname: \"" + name + "\"") {}
};

class InvalidEmail : public Error {
public:
  explicit InvalidEmail(const std::string& addr)
      : Error("invalid email address: \"" + addr + "\"") {}
};

class NotJson : public Error {
public:
  explicit NotJson(const std::string& what) : Error("not JSON: " + what) {}
};

class NotDomainObject : public Error {
public:
  explicit NotDomainObject(const std::string& cls)
      : Error("objectClassName is \"" + cls + "\", expected \"domain\"") {}
};

class NoKnownServer : public Error {
public:
  explicit NoKnownServer(const std::string& domain)
      : Error("no known registration data server for \"" + domain + "\"") {}
};

class MalformedReferral : public Error {
public:
  explicit MalformedReferral(const std::string& value)
      : Error("malformed referral target: \"" + value + "\"") {}
};

class SinkError : public Error {
public:
  explicit SinkError(const std::string& what) : Error("archive sink: " + what) {}
};

class ArchiveFormatError : public Error {
public:
  explicit ArchiveFormatError(const std::string& what)
      : Error("archive format: " + what) {}
};

class UnsupportedFormat : public Error {
public:
  explicit UnsupportedFormat(const std::string& fmt)
      : Error("unsupported output format: \"" + fmt + "\"") {}
};

class EmptySetError : public Error {
public:
  EmptySetError() : Error("set comparison requires nonempty sets") {}
};

class SchemaError : public Error {
public:
  explicit SchemaError(const std::string& what) : Error("schema: " + what) {}
};

class DanglingReferral : public Error {
public:
  explicit DanglingReferral(const std::string& target)
      : Error("scenario refers to undefined server \"" + target + "\"") {}
};

class BindError : public Error {
public:
  explicit BindError(const std::string& what) : Error("bind: " + what) {}
};

}  // namespace regaudit
