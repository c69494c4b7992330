#pragma once

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "negabent/boolfun.hpp"
#include "negabent/field.hpp"
#include "negabent/spectra.hpp"

namespace negabent {

/// Thrown for malformed or inconsistent input files.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two-line text format:
///   btf1 n=<n> field=gf2_<n>:<hex>     (or "anf1 ..." for ANF coefficients)
///   <hex dump>
/// Hex digit k carries entries 4k..4k+3, entry 4k in its least significant bit.
struct TruthTableFile {
  FieldSpec field;
  BooleanFunction f;  // always the truth table, also when read from an anf1 file
};

std::string to_hex(std::span<const std::uint8_t> bits);
std::vector<std::uint8_t> from_hex(std::string_view hex, std::size_t bit_count);

std::string format_truth_table(const BooleanFunction& f, const FieldSpec& field);
std::string format_anf(const BooleanFunction& f, const FieldSpec& field);
TruthTableFile parse_truth_table(std::string_view text);

void write_text_file(const std::filesystem::path& path, const std::string& text);
std::string read_text_file(const std::filesystem::path& path);

/// CSV "lambda_index,re" for Walsh and "lambda_index,re,im" for nega spectra.
std::string spectrum_csv(const WalshSpectrum& s);
std::string spectrum_csv(const NegaSpectrum& s);

}  // namespace negabent
