#include "chuacrypt/key_file.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <optional>
#include <string>

#include "chuacrypt/errors.hpp"

namespace chuacrypt {

namespace {

struct DoubleField {
  const char* name;
  double KeyConfig::*member = nullptr;
  double ChuaParams::*param = nullptr;
  double ChuaState::*state = nullptr;

  double& ref(KeyConfig& k) const {
    if (param) return k.params.*param;
    if (state) return k.initial.*state;
    return k.*member;
  }
};

// Canonical write order.
const std::array<DoubleField, 11> kDoubleFields{{
    {"c1", nullptr, &ChuaParams::c1},
    {"c2", nullptr, &ChuaParams::c2},
    {"l", nullptr, &ChuaParams::l},
    {"r", nullptr, &ChuaParams::r},
    {"ga", nullptr, &ChuaParams::ga},
    {"gb", nullptr, &ChuaParams::gb},
    {"bp", nullptr, &ChuaParams::bp},
    {"v_c1_0", nullptr, nullptr, &ChuaState::v_c1},
    {"v_c2_0", nullptr, nullptr, &ChuaState::v_c2},
    {"i_l_0", nullptr, nullptr, &ChuaState::i_l},
    {"h", &KeyConfig::h},
}};

constexpr std::string_view kTransient = "transient";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string encode_hex64(double value) {
  static constexpr char kDigits[] = "0123456789ABCDEF";
  auto bits = std::bit_cast<std::uint64_t>(value);
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = kDigits[bits & 0xF];
    bits >>= 4;
  }
  return out;
}

double decode_hex64(std::string_view hex, const std::string& field) {
  std::uint64_t bits = 0;
  bool ok = hex.size() == 16;
  if (ok) {
    const auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), bits, 16);
    ok = ec == std::errc() && ptr == hex.data() + hex.size();
  }
  if (!ok) {
    throw KeyFileError(KeyFileErrc::kBadHexEncoding, field,
                       "field '" + field + "' is not 16 hex digits: '" + std::string(hex) + "'");
  }
  return std::bit_cast<double>(bits);
}

KeyConfig parse_key_file(std::string_view text) {
  KeyConfig key;
  std::array<bool, kDoubleFields.size()> seen{};
  bool seen_transient = false;

  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw KeyFileError(KeyFileErrc::kMalformedLine, {},
                         "line " + std::to_string(line_no) + ": expected 'name = value'");
    }
    const std::string name(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));

    if (name == kTransient) {
      if (seen_transient) {
        throw KeyFileError(KeyFileErrc::kDuplicateField, name, "duplicate field 'transient'");
      }
      seen_transient = true;
      std::uint64_t t = 0;
      const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), t, 10);
      if (value.empty() || ec != std::errc() || ptr != value.data() + value.size()) {
        throw KeyFileError(KeyFileErrc::kBadInteger, name,
                           "field 'transient' is not a decimal integer: '" + std::string(value) + "'");
      }
      key.transient = static_cast<std::size_t>(t);
      continue;
    }

    std::optional<std::size_t> index;
    for (std::size_t i = 0; i < kDoubleFields.size(); ++i) {
      if (name == kDoubleFields[i].name) index = i;
    }
    if (!index) throw KeyFileError(KeyFileErrc::kUnknownField, name, "unknown field '" + name + "'");
    if (seen[*index]) throw KeyFileError(KeyFileErrc::kDuplicateField, name, "duplicate field '" + name + "'");
    seen[*index] = true;
    kDoubleFields[*index].ref(key) = decode_hex64(value, name);
  }

  for (std::size_t i = 0; i < kDoubleFields.size(); ++i) {
    if (!seen[i]) {
      const std::string name = kDoubleFields[i].name;
      throw KeyFileError(KeyFileErrc::kMissingField, name, "missing field '" + name + "'");
    }
  }
  if (!seen_transient) {
    throw KeyFileError(KeyFileErrc::kMissingField, std::string(kTransient), "missing field 'transient'");
  }
  return key;
}

std::string write_key_file(const KeyConfig& key) {
  std::string out;
  KeyConfig copy = key;
  for (const auto& f : kDoubleFields) {
    out += f.name;
    out += " = ";
    out += encode_hex64(f.ref(copy));
    out += '\n';
  }
  out += std::string(kTransient) + " = " + std::to_string(key.transient) + "\n";
  return out;
}

}  // namespace chuacrypt
