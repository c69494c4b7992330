#pragma once

#include <cstdint>
#include <vector>

#include "negabent/bitmatrix.hpp"
#include "negabent/boolfun.hpp"
#include "negabent/field.hpp"
#include "negabent/parallel.hpp"

namespace negabent {

/// Linearized polynomial sum_i coeffs[i] x^(2^i), i < n. A GF(2)-linear map of the field.
struct LinearizedPoly {
  FieldCtx ctx;
  std::vector<Element> coeffs;

  static LinearizedPoly zero(const FieldCtx& ctx) { return {ctx, std::vector<Element>(static_cast<size_t>(ctx.degree()), 0)}; }
  /// Adds c x^(2^i), i taken mod n.
  void add(Element c, int i);
  Element evaluate(Element x) const;
  /// Row j is L(x^j) in polynomial coordinates.
  BitMatrix matrix() const;
};

/// P(x) = lambda^(2^(n-k)) x^(2^(n-k)) + lambda x^(2^k) + x.
LinearizedPoly negabent_linearized(const FieldCtx& ctx, Element lambda, int k);
/// M(x) = lambda^(2^(n-k)) x^(2^(n-k)) + lambda x^(2^k); P = M + x.
LinearizedPoly gold_linearized(const FieldCtx& ctx, Element lambda, int k);

/// Kernel of L is {0}, decided by the rank of its coordinate matrix.
bool linearized_is_permutation(const LinearizedPoly& poly);

/// Tr(lambda x^(2^k + 1)). Throws for lambda == 0 or k outside [1, n).
BooleanFunction gold_function(const FieldCtx& ctx, Element lambda, int k);

bool is_negabent_monomial(const FieldCtx& ctx, Element lambda, int k);

/// Parameters d = gcd(k, n), t = n / d of the Gold exponent 2^k + 1.
struct GoldParams {
  int k = 0;
  int d = 0;
  int t = 0;
};
GoldParams gold_params(int n, int k);

/// Z_t(lambda) from C_1 = C_2 = 1, C_{i+2} = C_{i+1} + x^(2^(ik)) C_i, and
/// Z_t = C_{t+1} + x C_{t-1}^(2^k). Throws std::invalid_argument when t == 1.
Element zt_eval(const FieldCtx& ctx, Element lambda, int k);

/// Sorted distinct values v0^(2^(2k)+1) / (v0 + v0^(2^k))^(2^k+1), v0 outside GF(2^d).
std::vector<Element> zt_root_set(const FieldCtx& ctx, int k);
/// Closed-form size of the root set: (2^(n+d) - 2^d)/(2^(2d) - 1) for even t,
/// (2^(n+d) - 2^(2d))/(2^(2d) - 1) for odd t.
std::uint64_t zt_root_count_formula(int n, int k);

/// Sorted image {x^(2^k+1) : x in GF(2^n)}, including 0.
std::vector<Element> gold_power_image(const FieldCtx& ctx, int k);

/// lambda outside the power image. Throws for odd n or lambda == 0.
bool is_bent_monomial(const FieldCtx& ctx, Element lambda, int k);
/// lambda outside both the power image and the Z_t root set.
bool is_bent_negabent_monomial(const FieldCtx& ctx, Element lambda, int k);
/// Both M(x) and M(x) + x are permutations.
bool complete_mapping_check(const FieldCtx& ctx, Element lambda, int k);

/// Per-lambda verdicts of every characterization for one (field, k).
struct MonomialRow {
  Element lambda = 0;
  bool bent = false;              // Walsh spectrum flat
  bool negabent = false;          // nega-Hadamard spectrum flat
  bool p_permutation = false;     // P(x) permutes the field
  bool zt_zero = false;           // Z_t(lambda) == 0
  bool in_root_set = false;       // lambda of the v0 root form
  bool in_power_image = false;    // lambda = v^(2^k+1)
  bool complete_mapping = false;  // M(x) complete mapping
};

/// Cached power image and root set for one (field, k), plus the full lambda sweep.
class MonomialClass {
 public:
  MonomialClass(FieldCtx ctx, int k);

  const FieldCtx& field() const { return ctx_; }
  const GoldParams& params() const { return params_; }
  bool in_power_image(Element lambda) const { return power_image_[lambda] != 0; }
  bool in_root_set(Element lambda) const { return root_set_[lambda] != 0; }
  std::size_t power_image_size() const;
  std::size_t root_set_size() const;

  MonomialRow row(Element lambda, bool with_spectra = true) const;
  /// Rows for all lambda in [0, 2^n); lambda = 0 uses the zero function.
  std::vector<MonomialRow> sweep(Exec exec = Exec::parallel, bool with_spectra = true) const;

 private:
  FieldCtx ctx_;
  GoldParams params_;
  std::vector<std::uint8_t> power_image_;
  std::vector<std::uint8_t> root_set_;
};

/// Cardinalities from the counting argument for quadratic bent-negabent existence.
/// S_1 is the power image, S_2 the root set. Both conventions for 0 in S_1 are kept.
struct ExistenceCensus {
  int n = 0;
  int k = 0;
  std::uint64_t gold_gcd = 0;  // gcd(2^k + 1, 2^n - 1)
  std::size_t s1 = 0;          // with 0
  std::size_t s1_nonzero = 0;  // without 0
  std::size_t s2 = 0;
  std::size_t intersection = 0;
  std::size_t union_size = 0;          // with 0 in S_1
  std::size_t union_nonzero_s1 = 0;    // without 0 in S_1
  std::size_t surplus = 0;             // 2^n - union_nonzero_s1
  std::size_t bent_negabent_count = 0;  // lambda != 0 outside S_1 and S_2
  bool bound_holds = false;            // surplus >= intersection + 1
};
ExistenceCensus existence_census(const FieldCtx& ctx, int k);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

}  // namespace negabent
