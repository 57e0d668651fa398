#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chuacrypt/image.hpp"
#include "chuacrypt/keystream.hpp"

namespace chuacrypt {

// Elementwise XOR. Throws LengthMismatch unless both spans have equal length.
std::vector<std::uint8_t> xor_bytes(std::span<const std::uint8_t> data,
                                    std::span<const std::uint8_t> keystream);

// XORs the pixels, in row-major order, with the first width*height bytes of
// the key's keystream. The scheme is symmetric: decrypt_image is the same
// operation.
Image encrypt_image(const Image& img, const KeyConfig& key);
Image decrypt_image(const Image& img, const KeyConfig& key);

}  // namespace chuacrypt
