#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace chuacrypt {

enum class Extension;

// Base for every error raised by the library. Precondition violations on
// caller-supplied arguments use std::invalid_argument instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A simulation produced NaN or infinity. `step` is the 1-based index of the
// RK4 step that failed, when known.
class NonFiniteState : public Error {
 public:
  explicit NonFiniteState(std::optional<std::size_t> step = std::nullopt,
                          std::optional<Extension> extension = std::nullopt);

  std::optional<std::size_t> step() const noexcept { return step_; }
  std::optional<Extension> extension() const noexcept { return extension_; }

 private:
  std::optional<std::size_t> step_;
  std::optional<Extension> extension_;
};

// The two pseudo-orbits coincide exactly at `index` (0-based, after the
// transient) where they are required to differ.
class DegenerateKey : public Error {
 public:
  explicit DegenerateKey(std::size_t index);
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class LengthMismatch : public Error {
 public:
  LengthMismatch(std::size_t expected, std::size_t actual);
};

// Correlation is undefined because one marginal series is constant.
class ZeroVariance : public Error {
 public:
  using Error::Error;
};

// Kantz estimation: no reference point has a non-empty neighborhood.
class NoNeighbors : public Error {
 public:
  using Error::Error;
};

// Kantz estimation: a mean neighbor separation is zero.
class LogOfZero : public Error {
 public:
  using Error::Error;
};

enum class PgmErrc { kBadMagic, kBadHeader, kUnsupportedMaxval, kTruncatedRaster };

class PgmError : public Error {
 public:
  PgmError(PgmErrc code, const std::string& what);
  PgmErrc code() const noexcept { return code_; }

 private:
  PgmErrc code_;
};

enum class KeyFileErrc {
  kMissingField,
  kDuplicateField,
  kBadHexEncoding,
  kUnknownField,
  kMalformedLine,
  kBadInteger,
};

class KeyFileError : public Error {
 public:
  KeyFileError(KeyFileErrc code, std::string field, const std::string& what);
  KeyFileErrc code() const noexcept { return code_; }
  const std::string& field() const noexcept { return field_; }

 private:
  KeyFileErrc code_;
  std::string field_;
};

}  // namespace chuacrypt
