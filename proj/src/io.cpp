#include "negabent/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace negabent {

namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

std::string header(std::string_view tag, int n, const FieldSpec& field) {
  if (field.n != n)
    throw FormatError("function has " + std::to_string(n) + " variables but field is " + field.to_string());
  std::ostringstream os;
  os << tag << " n=" << n << " field=" << field.to_string();
  return os.str();
}

}  // namespace

std::string to_hex(std::span<const std::uint8_t> bits) {
  std::string out;
  for (std::size_t k = 0; k < bits.size(); k += 4) {
    int digit = 0;
    for (std::size_t j = 0; j < 4 && k + j < bits.size(); ++j) digit |= (bits[k + j] ? 1 : 0) << j;
    out.push_back(kHexDigits[digit]);
  }
  return out;
}

std::vector<std::uint8_t> from_hex(std::string_view hex, std::size_t bit_count) {
  const std::size_t digits = (bit_count + 3) / 4;
  if (hex.size() != digits)
    throw FormatError("expected " + std::to_string(digits) + " hex digits, got " + std::to_string(hex.size()));
  std::vector<std::uint8_t> bits(bit_count, 0);
  for (std::size_t k = 0; k < digits; ++k) {
    const int v = hex_value(hex[k]);
    if (v < 0) throw FormatError(std::string("invalid hex digit '") + hex[k] + "'");
    for (std::size_t j = 0; j < 4; ++j) {
      const bool bit = (v >> j) & 1;
      if (4 * k + j < bit_count)
        bits[4 * k + j] = bit;
      else if (bit)
        throw FormatError("nonzero padding bits in hex dump");
    }
  }
  return bits;
}

std::string format_truth_table(const BooleanFunction& f, const FieldSpec& field) {
  return header("btf1", f.num_vars(), field) + "\n" + to_hex(f.bits()) + "\n";
}

std::string format_anf(const BooleanFunction& f, const FieldSpec& field) {
  return header("anf1", f.num_vars(), field) + "\n" + to_hex(anf(f).coeffs) + "\n";
}

TruthTableFile parse_truth_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line1, line2;
  if (!std::getline(in, line1)) throw FormatError("empty truth-table file");
  std::getline(in, line2);
  while (!line2.empty() && (line2.back() == '\r' || line2.back() == ' ')) line2.pop_back();
  if (!line1.empty() && line1.back() == '\r') line1.pop_back();

  std::istringstream hs(line1);
  std::string tag, ntok, ftok;
  hs >> tag >> ntok >> ftok;
  if (tag != "btf1" && tag != "anf1") throw FormatError("unknown file tag '" + tag + "'");
  if (!ntok.starts_with("n=") || !ftok.starts_with("field=")) throw FormatError("malformed header '" + line1 + "'");
  int n = -1;
  const auto nv = std::string_view(ntok).substr(2);
  auto r = std::from_chars(nv.data(), nv.data() + nv.size(), n);
  if (r.ec != std::errc{} || r.ptr != nv.data() + nv.size() || n < 0 || n > kMaxFieldDegree)
    throw FormatError("bad variable count in '" + line1 + "'");

  TruthTableFile out;
  try {
    out.field = FieldSpec::parse(std::string_view(ftok).substr(6));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  if (out.field.n != n)
    throw FormatError("declared n=" + std::to_string(n) + " does not match field " + out.field.to_string());
  auto bits = from_hex(line2, std::size_t{1} << n);
  if (tag == "anf1")
    out.f = from_anf(Anf{n, std::move(bits)});
  else
    out.f = BooleanFunction(n, std::move(bits));
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  out << text;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string spectrum_csv(const WalshSpectrum& s) {
  std::ostringstream os;
  os << "lambda_index,re\n";
  for (std::size_t l = 0; l < s.values.size(); ++l) os << l << ',' << s.values[l] << '\n';
  return os.str();
}

std::string spectrum_csv(const NegaSpectrum& s) {
  std::ostringstream os;
  os << "lambda_index,re,im\n";
  for (std::size_t l = 0; l < s.values.size(); ++l) os << l << ',' << s.values[l].re << ',' << s.values[l].im << '\n';
  return os.str();
}

}  // namespace negabent
