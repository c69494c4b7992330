#include <gtest/gtest.h>

#include "negabent/sampling.hpp"
#include "negabent/spectra.hpp"
#include "oracles.hpp"

using namespace negabent;

TEST(Nega, SingleVariable) {
  // f = 0 on one variable: spectrum 1 + i, 1 - i
  const NegaSpectrum s = nega(BooleanFunction(1));
  ASSERT_EQ(s.values.size(), 2u);
  EXPECT_EQ(s.values[0], (Gaussian{1, 1}));
  EXPECT_EQ(s.values[1], (Gaussian{1, -1}));
}

TEST(Spectra, ButterfliesMatchOracleSums) {
  Rng rng(11);
  for (int n = 0; n <= 7; ++n)
    for (int s = 0; s < 10; ++s) {
      const BooleanFunction f = random_function(n, rng);
      const auto w = oracle::walsh(f);
      const auto h = oracle::nega(f);
      const WalshSpectrum fw = walsh(f);
      const NegaSpectrum fh = nega(f);
      const NegaSpectrum dh = reference::nega_direct(f);
      for (std::uint32_t l = 0; l < f.size(); ++l) {
        ASSERT_EQ(fw.values[l], w[l]);
        ASSERT_EQ(fh.values[l], (Gaussian{h[l].first, h[l].second}));
        ASSERT_EQ(dh.values[l], fh.values[l]);
      }
      ASSERT_EQ(reference::walsh_direct(f).values, fw.values);
    }
}

TEST(Spectra, ParsevalHolds) {
  Rng rng(2);
  const BooleanFunction f = random_function(9, rng);
  std::int64_t sw = 0, sn = 0;
  for (auto v : walsh(f).values) sw += v * v;
  for (auto v : nega(f).values) sn += v.norm();
  EXPECT_EQ(sw, std::int64_t{1} << 18);
  EXPECT_EQ(sn, std::int64_t{1} << 18);
}

TEST(Spectra, CubicExampleIsNegabent) {
  const BooleanFunction f = oracle::cubic6();
  EXPECT_TRUE(is_negabent(f));
  EXPECT_TRUE(oracle::negabent(f));
  // it is also bent
  EXPECT_TRUE(oracle::bent(f));
  EXPECT_TRUE(is_bent(f));
}

TEST(Spectra, AffineFunctionsAreNegabent) {
  for (int n = 1; n <= 6; ++n)
    for (std::uint32_t m = 0; m < (1u << n); ++m) ASSERT_TRUE(is_negabent(linear_function(n, m, m & 1)));
  EXPECT_FALSE(is_bent(BooleanFunction(4)));
  EXPECT_FALSE(is_bent(BooleanFunction(3)));
}

TEST(Spectra, NegaperiodicAcfVanishesExactlyForNegabent) {
  Rng rng(4);
  for (int n = 1; n <= 8; ++n)
    for (int s = 0; s < 40; ++s) {
      const BooleanFunction f = (s % 2) ? random_quadratic(n, rng) : random_function(n, rng);
      const auto acf = negaperiodic_acf(f);
      const bool zero = std::all_of(acf.begin() + 1, acf.end(), [](std::int64_t v) { return v == 0; });
      ASSERT_EQ(acf[0], std::int64_t{1} << n);
      ASSERT_EQ(zero, is_negabent(f));
    }
}

TEST(Spectra, PeriodicAcfVanishesExactlyForBent) {
  Rng rng(6);
  for (int s = 0; s < 200; ++s) {
    const BooleanFunction f = random_quadratic(6, rng);
    const auto acf = periodic_acf(f);
    ASSERT_EQ(std::all_of(acf.begin() + 1, acf.end(), [](std::int64_t v) { return v == 0; }), is_bent(f));
  }
}

TEST(Spectra, QuadRankOracleMatchesSpectraOnAllFourVariableQuadratics) {
  const int bits = quadratic_code_bits(4);
  for (std::uint64_t code = 0; code < (1u << bits); ++code) {
    const BooleanFunction f = quadratic_from_code(4, code);
    const QuadVerdict v = quad_rank_oracle(f);
    ASSERT_EQ(v.bent, oracle::bent(f));
    ASSERT_EQ(v.negabent, oracle::negabent(f));
  }
  EXPECT_THROW(symplectic_matrix(oracle::cubic6()), std::invalid_argument);
}

TEST(Spectra, FlatnessViolationsListBadIndices) {
  const BooleanFunction f(2);
  EXPECT_EQ(flatness_violations(walsh(f)).size(), 4u);
  EXPECT_EQ(max_abs_sq(walsh(f)), 16);
  EXPECT_TRUE(flatness_violations(nega(f)).empty());
}
