#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <system_error>

#include "chuacrypt/analysis.hpp"
#include "chuacrypt/cipher.hpp"
#include "chuacrypt/errors.hpp"
#include "chuacrypt/kantz.hpp"
#include "chuacrypt/key_file.hpp"
#include "chuacrypt/keystream.hpp"
#include "chuacrypt/pgm.hpp"

namespace chuacrypt::cli {

namespace {

// Malformed command-line values that CLI11 cannot check itself.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string format_double(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

double parse_decimal(const std::string& text, const std::string& name) {
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw UsageError("--" + name + ": not a decimal number: '" + text + "'");
  }
  return v;
}

KeyConfig load_key(const std::string& path) {
  const auto bytes = read_file(path);
  KeyConfig key = parse_key_file(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
  key.validate();
  return key;
}

void write_text(const std::string& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

// One value per line; the first field of comma-separated rows is used and a
// non-numeric first line is treated as a header.
std::vector<double> parse_series_csv(std::string_view text) {
  std::vector<double> series;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    line = line.substr(0, line.find(','));
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty()) continue;
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), v);
    if (ec != std::errc() || ptr != line.data() + line.size()) {
      if (line_no == 1) continue;
      throw Error("series line " + std::to_string(line_no) + ": not a number: '" + std::string(line) + "'");
    }
    series.push_back(v);
  }
  return series;
}

std::string report_csv(const AnalysisReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("nan"); };
  std::string out = "field,value\n";
  out += "entropy_bits," + format_double(r.entropy_bits) + "\n";
  out += "corr_horizontal," + opt(r.corr_horizontal) + "\n";
  out += "corr_vertical," + opt(r.corr_vertical) + "\n";
  out += "corr_diagonal," + opt(r.corr_diagonal) + "\n";
  out += "chi_square," + format_double(r.chi_square) + "\n";
  for (std::size_t i = 0; i < r.histogram.counts.size(); ++i) {
    out += "hist_" + std::to_string(i) + "," + std::to_string(r.histogram.counts[i]) + "\n";
  }
  return out;
}

constexpr std::array<const char*, 11> kKeyFields{"c1",     "c2",     "l",     "r", "ga", "gb",
                                                 "bp",     "v_c1_0", "v_c2_0", "i_l_0", "h"};

void apply_override(KeyConfig& key, const std::string& field, double v) {
  if (field == "c1") key.params.c1 = v;
  else if (field == "c2") key.params.c2 = v;
  else if (field == "l") key.params.l = v;
  else if (field == "r") key.params.r = v;
  else if (field == "ga") key.params.ga = v;
  else if (field == "gb") key.params.gb = v;
  else if (field == "bp") key.params.bp = v;
  else if (field == "v_c1_0") key.initial.v_c1 = v;
  else if (field == "v_c2_0") key.initial.v_c2 = v;
  else if (field == "i_l_0") key.initial.i_l = v;
  else if (field == "h") key.h = v;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chua's-circuit lower-bound-error image cipher"};
  app.name("chuacrypt");
  app.require_subcommand(1);

  // keygen
  auto* keygen = app.add_subcommand("keygen", "Write a key file (defaults: the reference circuit)");
  keygen->set_help_flag("--help", "Print this help message and exit");  // frees -h / --h for the step size
  std::string keygen_out;
  keygen->add_option("--out", keygen_out, "Key file to write")->required();
  std::map<std::string, std::string> overrides;
  for (const char* field : kKeyFields) {
    keygen->add_option(std::string("--") + field, overrides[field], std::string("Override ") + field + " (decimal)");
  }
  std::optional<std::size_t> transient;
  keygen->add_option("--transient", transient, "Samples discarded before the keystream");

  // encrypt / decrypt
  std::string key_path, in_path, out_path;
  auto add_xcrypt = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("--key", key_path, "Key file")->required();
    sub->add_option("--in", in_path, "Input PGM (P5, maxval 255)")->required();
    sub->add_option("--out", out_path, "Output PGM")->required();
    return sub;
  };
  auto* encrypt = add_xcrypt("encrypt", "XOR-encrypt a grayscale PGM");
  auto* decrypt = add_xcrypt("decrypt", "Decrypt a grayscale PGM (same operation as encrypt)");

  // keystream
  auto* keystream = app.add_subcommand("keystream", "Write raw keystream bytes");
  std::size_t ks_len = 0;
  keystream->add_option("--key", key_path, "Key file")->required();
  keystream->add_option("--len", ks_len, "Number of bytes")->required()->check(CLI::PositiveNumber);
  keystream->add_option("--out", out_path, "Output file")->required();

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Entropy, adjacent correlations, chi-square, histogram");
  analyze_cmd->add_option("--in", in_path, "Input PGM")->required();
  analyze_cmd->add_option("--out", out_path, "Report CSV")->required();

  // lyapunov
  auto* lyapunov = app.add_subcommand("lyapunov", "Kantz largest Lyapunov exponent of a scalar series");
  KantzConfig kantz;
  double epsilon = 0.0;
  std::vector<std::size_t> fit;
  lyapunov->add_option("--in", in_path, "Series CSV (one value per line)")->required();
  lyapunov->add_option("--out", out_path, "Stretching curve CSV")->required();
  auto* eps_opt = lyapunov->add_option("--epsilon", epsilon, "Neighborhood radius (default 0.2*stddev)");
  lyapunov->add_option("--max-dn", kantz.max_delta_n, "Largest Δn")->check(CLI::PositiveNumber);
  lyapunov->add_option("--fit", fit, "Fit window LO HI")->expected(2);
  lyapunov->add_option("--theiler", kantz.theiler_window, "Theiler window");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (keygen->parsed()) {
      KeyConfig key = KeyConfig::reference();
      for (const auto& [field, text] : overrides) {
        if (!text.empty()) apply_override(key, field, parse_decimal(text, field));
      }
      if (transient) key.transient = *transient;
      try {
        key.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      write_text(keygen_out, write_key_file(key));
    } else if (encrypt->parsed() || decrypt->parsed()) {
      const KeyConfig key = load_key(key_path);
      const Image img = load_pgm(in_path);
      save_pgm(out_path, encrypt->parsed() ? encrypt_image(img, key) : decrypt_image(img, key));
    } else if (keystream->parsed()) {
      const KeyConfig key = load_key(key_path);
      write_file(out_path, generate_keystream(key, ks_len));
    } else if (analyze_cmd->parsed()) {
      write_text(out_path, report_csv(analyze(load_pgm(in_path))));
    } else if (lyapunov->parsed()) {
      if (*eps_opt) kantz.epsilon = epsilon;
      if (fit.size() == 2) {
        kantz.fit_lo = fit[0];
        kantz.fit_hi = fit[1];
      }
      try {
        kantz.validate();
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      const auto bytes = read_file(in_path);
      const auto series =
          parse_series_csv(std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
      const StretchingCurve curve = kantz_stretching_curve(series, kantz);
      const double lambda = fit_slope(curve, kantz.fit_lo, kantz.fit_hi);
      std::string csv = "delta_n,s\n";
      for (const auto& pt : curve.points) csv += std::to_string(pt.delta_n) + "," + format_double(pt.s) + "\n";
      csv += "lambda," + format_double(lambda) + "\n";
      write_text(out_path, csv);
      out << "lambda = " << format_double(lambda) << " (" << curve.references << " reference points, "
          << curve.skipped << " without neighbors)\n";
    }
  } catch (const UsageError& e) {
    err << "chuacrypt: " << e.what() << "\n";
    return kUsageError;
  } catch (const DegenerateKey& e) {
    err << "chuacrypt: " << e.what() << "\n";
    return kKeyError;
  } catch (const NonFiniteState& e) {
    err << "chuacrypt: " << e.what() << "\n";
    return kKeyError;
  } catch (const std::exception& e) {
    err << "chuacrypt: " << e.what() << "\n";
    return kInputError;
  }
  return kSuccess;
}

}  // namespace chuacrypt::cli
