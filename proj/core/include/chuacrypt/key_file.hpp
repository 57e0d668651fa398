#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "chuacrypt/keystream.hpp"

namespace chuacrypt {

// Key file: one "name = value" assignment per line. Floating-point fields
// (c1 c2 l r ga gb bp v_c1_0 v_c2_0 i_l_0 h) carry the 16 hex digits of the
// big-endian IEEE-754 binary64 encoding; transient is a decimal integer.
// Blank lines and lines starting with '#' are ignored on parse.

// Throws KeyFileError.
KeyConfig parse_key_file(std::string_view text);

std::string write_key_file(const KeyConfig& key);

std::string encode_hex64(double value);
// Throws KeyFileError(kBadHexEncoding) unless `hex` is exactly 16 hex digits.
double decode_hex64(std::string_view hex, const std::string& field = {});

}  // namespace chuacrypt
