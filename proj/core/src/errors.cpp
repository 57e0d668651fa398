#include "chuacrypt/errors.hpp"

#include <string>
#include <utility>

#include "chuacrypt/chua.hpp"

namespace chuacrypt {

namespace {

std::string non_finite_message(std::optional<std::size_t> step,
                               std::optional<Extension> extension) {
  std::string msg = "non-finite state";
  if (step) msg += " at step " + std::to_string(*step);
  if (extension) msg += " (extension " + std::string(to_string(*extension)) + ")";
  return msg;
}

}  // namespace

NonFiniteState::NonFiniteState(std::optional<std::size_t> step,
                               std::optional<Extension> extension)
    : Error(non_finite_message(step, extension)), step_(step), extension_(extension) {}

DegenerateKey::DegenerateKey(std::size_t index)
    : Error("degenerate key: pseudo-orbits coincide at sample " + std::to_string(index)),
      index_(index) {}

LengthMismatch::LengthMismatch(std::size_t expected, std::size_t actual)
    : Error("length mismatch: expected " + std::to_string(expected) + ", got " +
            std::to_string(actual)) {}

PgmError::PgmError(PgmErrc code, const std::string& what) : Error(what), code_(code) {}

KeyFileError::KeyFileError(KeyFileErrc code, std::string field, const std::string& what)
    : Error(what), code_(code), field_(std::move(field)) {}

}  // namespace chuacrypt
