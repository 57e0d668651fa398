#include "chuacrypt/pgm.hpp"

#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "chuacrypt/errors.hpp"

namespace chuacrypt {

namespace {

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class HeaderReader {
 public:
  explicit HeaderReader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (is_space(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else {
        break;
      }
    }
  }

  std::size_t read_number(const char* name) {
    skip_space_and_comments();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < bytes_.size() && bytes_[pos_] >= '0' && bytes_[pos_] <= '9') {
      const std::size_t digit = bytes_[pos_] - '0';
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10) {
        throw PgmError(PgmErrc::kBadHeader, std::string("PGM ") + name + " is too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw PgmError(PgmErrc::kBadHeader, std::string("PGM ") + name + " is missing");
    return value;
  }

  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  bool at_end() const { return pos_ >= bytes_.size(); }
  std::uint8_t peek() const { return bytes_[pos_]; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

Image parse_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw PgmError(PgmErrc::kBadMagic, "not a binary PGM file (expected P5)");
  }
  HeaderReader in(bytes);
  in.advance(2);
  if (in.at_end() || !(is_space(in.peek()) || in.peek() == '#')) {
    throw PgmError(PgmErrc::kBadMagic, "not a binary PGM file (expected P5)");
  }
  const std::size_t width = in.read_number("width");
  const std::size_t height = in.read_number("height");
  const std::size_t maxval = in.read_number("maxval");
  if (width == 0 || height == 0) throw PgmError(PgmErrc::kBadHeader, "PGM dimensions must be positive");
  if (maxval == 0 || maxval > 65535) throw PgmError(PgmErrc::kBadHeader, "PGM maxval out of range");
  if (maxval != 255) {
    throw PgmError(PgmErrc::kUnsupportedMaxval,
                   "unsupported PGM maxval " + std::to_string(maxval) + " (only 255)");
  }
  if (in.at_end() || !is_space(in.peek())) {
    throw PgmError(PgmErrc::kBadHeader, "expected a single whitespace byte after maxval");
  }
  in.advance(1);

  const std::size_t count = width * height;
  if (bytes.size() - in.pos() < count) {
    throw PgmError(PgmErrc::kTruncatedRaster, "PGM raster has " + std::to_string(bytes.size() - in.pos()) +
                                                  " bytes, expected " + std::to_string(count));
  }
  const auto raster = bytes.subspan(in.pos(), count);
  return Image(width, height, std::vector<std::uint8_t>(raster.begin(), raster.end()));
}

std::vector<std::uint8_t> write_pgm(const Image& img) {
  const std::string header =
      "P5\n" + std::to_string(img.width()) + " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), img.pixels().begin(), img.pixels().end());
  return out;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error("error reading " + path.string());
  return bytes;
}

void write_file(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("error writing " + path.string());
}

Image load_pgm(const std::filesystem::path& path) { return parse_pgm(read_file(path)); }

void save_pgm(const std::filesystem::path& path, const Image& img) { write_file(path, write_pgm(img)); }

}  // namespace chuacrypt
