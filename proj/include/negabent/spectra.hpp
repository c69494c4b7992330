#pragma once

#include <cstdint>
#include <vector>

#include "negabent/bitmatrix.hpp"
#include "negabent/boolfun.hpp"

namespace negabent {

/// a + b i with exact integer parts.
struct Gaussian {
  std::int64_t re = 0;
  std::int64_t im = 0;

  std::int64_t norm() const { return re * re + im * im; }
  bool operator==(const Gaussian&) const = default;
};

/// Unnormalized Walsh-Hadamard spectrum: values[l] = sum_x (-1)^(f(x) + l.x).
struct WalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;
};

/// Unnormalized nega-Hadamard spectrum: values[l] = sum_x (-1)^(f(x) + l.x) i^wt(x).
struct NegaSpectrum {
  int n = 0;
  std::vector<Gaussian> values;
};

/// O(n 2^n) butterfly.
WalshSpectrum walsh(const BooleanFunction& f);
/// O(n 2^n) butterfly; coordinate j maps (a, b) -> (a + i b, a - i b), coordinate 0 first.
NegaSpectrum nega(const BooleanFunction& f);

/// tau_a = sum_x (-1)^(f(x) + f(x + a)), all a.
std::vector<std::int64_t> periodic_acf(const BooleanFunction& f);
/// sum_x (-1)^(f(x) + f(x + a) + x.a), all a.
std::vector<std::int64_t> negaperiodic_acf(const BooleanFunction& f);

/// Indices l with values[l]^2 != 2^n (resp. |values[l]|^2 != 2^n).
std::vector<std::uint32_t> flatness_violations(const WalshSpectrum& s);
std::vector<std::uint32_t> flatness_violations(const NegaSpectrum& s);
std::int64_t max_abs_sq(const WalshSpectrum& s);
std::int64_t max_abs_sq(const NegaSpectrum& s);

/// False for odd n.
bool is_bent(const BooleanFunction& f);
bool is_negabent(const BooleanFunction& f);
bool is_bent_negabent(const BooleanFunction& f);

/// B = Q + Q^T from the degree-2 ANF coefficients; throws std::invalid_argument
/// when deg f > 2.
BitMatrix symplectic_matrix(const BooleanFunction& f);

struct QuadVerdict {
  bool bent = false;
  bool negabent = false;
};
/// bent iff rank B = n, negabent iff rank(B + I) = n.
QuadVerdict quad_rank_oracle(const BooleanFunction& f);

/// Direct O(4^n) sums, kept as the serial reference for the butterflies.
namespace reference {
WalshSpectrum walsh_direct(const BooleanFunction& f);
NegaSpectrum nega_direct(const BooleanFunction& f);
}  // namespace reference

}  // namespace negabent
