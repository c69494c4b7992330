#include <gtest/gtest.h>

#include <filesystem>

#include "negabent/io.hpp"
#include "negabent/sampling.hpp"
#include "oracles.hpp"

using namespace negabent;

TEST(Hex, NibbleLayout) {
  const std::vector<std::uint8_t> bits = {1, 0, 0, 0, 0, 1, 1, 1};
  EXPECT_EQ(to_hex(bits), "1e");
  EXPECT_EQ(from_hex("1e", 8), bits);
  EXPECT_EQ(to_hex(std::vector<std::uint8_t>{0, 1}), "2");
  EXPECT_THROW(from_hex("4", 2), FormatError);
  EXPECT_THROW(from_hex("1g", 8), FormatError);
  EXPECT_THROW(from_hex("1", 8), FormatError);
}

TEST(TruthTableFile, RoundTrip) {
  Rng rng(1);
  for (int n = 0; n <= 10; ++n) {
    const BooleanFunction f = random_function(n, rng);
    const FieldSpec spec{n, n ? default_modulus(n) : 1};
    if (n == 0) continue;
    const TruthTableFile a = parse_truth_table(format_truth_table(f, spec));
    EXPECT_EQ(a.f, f);
    EXPECT_EQ(a.field, spec);
    EXPECT_EQ(parse_truth_table(format_anf(f, spec)).f, f);
  }
}

TEST(TruthTableFile, KnownText) {
  const BooleanFunction f = oracle::cubic6();
  const std::string text = format_truth_table(f, FieldSpec{6, 0x43});
  EXPECT_TRUE(text.starts_with("btf1 n=6 field=gf2_6:43\n"));
  EXPECT_EQ(text.size(), std::string("btf1 n=6 field=gf2_6:43\n").size() + 16 + 1);
}

TEST(TruthTableFile, Rejects) {
  EXPECT_THROW(parse_truth_table(""), FormatError);
  EXPECT_THROW(parse_truth_table("xyz n=2 field=gf2_2:7\n0\n"), FormatError);
  EXPECT_THROW(parse_truth_table("btf1 n=3 field=gf2_2:7\n00\n"), FormatError);
  EXPECT_THROW(parse_truth_table("btf1 n=2 field=gf2_2:7\n00\n"), FormatError);
  EXPECT_THROW(parse_truth_table("btf1 n=2 gf2_2:7\n0\n"), FormatError);
  EXPECT_THROW(format_truth_table(BooleanFunction(3), FieldSpec{4, 0x13}), FormatError);
  EXPECT_NO_THROW(parse_truth_table("btf1 n=2 field=gf2_2:7\r\n6\r\n"));
}

TEST(Files, WriteRead) {
  const auto path = std::filesystem::temp_directory_path() / "negabent_io_test.btf";
  write_text_file(path, "hello\n");
  EXPECT_EQ(read_text_file(path), "hello\n");
  std::filesystem::remove(path);
  EXPECT_THROW(read_text_file("/nonexistent/dir/file"), std::runtime_error);
}

TEST(Csv, Headers) {
  const BooleanFunction f(1);
  EXPECT_EQ(spectrum_csv(walsh(f)), "lambda_index,re\n0,2\n1,0\n");
  EXPECT_EQ(spectrum_csv(nega(f)), "lambda_index,re,im\n0,1,1\n1,1,-1\n");
}
