#include "chuacrypt/cipher.hpp"

#include "chuacrypt/errors.hpp"

namespace chuacrypt {

std::vector<std::uint8_t> xor_bytes(std::span<const std::uint8_t> data,
                                    std::span<const std::uint8_t> keystream) {
  if (data.size() != keystream.size()) throw LengthMismatch(data.size(), keystream.size());
  std::vector<std::uint8_t> out(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(data[i] ^ keystream[i]);
  }
  return out;
}

Image encrypt_image(const Image& img, const KeyConfig& key) {
  const Keystream ks = generate_keystream(key, img.size());
  return Image(img.width(), img.height(), xor_bytes(img.pixels(), ks));
}

Image decrypt_image(const Image& img, const KeyConfig& key) { return encrypt_image(img, key); }

}  // namespace chuacrypt
