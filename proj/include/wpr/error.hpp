#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wpr {

/// Argument outside the mathematical domain of an operation (negative gains,
/// tau outside (0,1), Lambert W below the branch point, non-unit beamformer).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// An effective channel vanished, so projections and directions are undefined.
class DegenerateChannelError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Scenario parameters that violate a SystemConfig invariant or are missing.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scenario file syntax/semantic error. Line is 1-based; 0 when the key is
/// absent from the file.
class ParseError : public ConfigError {
 public:
  ParseError(std::string key, std::size_t line, const std::string& what)
      : ConfigError(format(key, line, what)), key_(std::move(key)), line_(line) {}

  const std::string& key() const noexcept { return key_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& key, std::size_t line, const std::string& what) {
    std::string out = line > 0 ? "line " + std::to_string(line) + ": " : std::string{};
    if (!key.empty()) out += "key '" + key + "': ";
    return out + what;
  }

  std::string key_;
  std::size_t line_;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wpr
