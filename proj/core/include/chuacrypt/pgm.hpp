#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "chuacrypt/image.hpp"

namespace chuacrypt {

// Binary PGM ("P5") with maxval 255. Header fields are separated by ASCII
// whitespace and may be interleaved with '#' comments running to end of
// line; exactly one whitespace byte separates maxval from the raster.
// Throws PgmError.
Image parse_pgm(std::span<const std::uint8_t> bytes);

// Canonical form: "P5\n<w> <h>\n255\n" followed by the raster.
std::vector<std::uint8_t> write_pgm(const Image& img);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

Image load_pgm(const std::filesystem::path& path);
void save_pgm(const std::filesystem::path& path, const Image& img);

}  // namespace chuacrypt
