#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "negabent/boolfun.hpp"
#include "negabent/field.hpp"
#include "negabent/parallel.hpp"

namespace negabent {

/// A map of GF(2^t) given by its value table (indexed by polynomial-basis element).
struct PermSpec {
  FieldCtx ctx;
  std::vector<Element> table;

  static PermSpec from_poly(const FieldCtx& ctx, const UnivariatePoly& poly);
  static PermSpec identity(const FieldCtx& ctx);
  /// y -> c y
  static PermSpec scaled(const FieldCtx& ctx, Element c);

  Element operator()(Element y) const { return table[y]; }
  bool is_bijective() const;
  /// pi(x + y) + pi(0) = pi(x) + pi(y) + pi(0) for all x, y.
  bool is_affine() const;
  /// y -> pi(y) + y
  PermSpec plus_identity() const;
};

bool is_bijection(std::span<const Element> table);

/// Maiorana-McFarland function Tr_1^t(x pi(y) + h(y)) on n = 2t variables.
/// Truth-table index = coords(x) + (coords(y) << t): x in the low block, y in the high block.
struct MMFunction {
  PermSpec pi;
  std::vector<Element> h_values;
  BooleanFunction f;

  int t() const { return pi.ctx.degree(); }
};

/// h given as a value table over GF(2^t).
MMFunction mm_build(const PermSpec& pi, std::vector<Element> h_values);
MMFunction mm_build(const PermSpec& pi, const UnivariatePoly& h);

/// Y_{a,b} = { y : pi(y) + pi(y + b) = a }.
std::vector<Element> y_set(const PermSpec& pi, Element a, Element b);

/// For every a, b != 0 with Y_{a,b} nonempty:
/// sum_{y in Y_{a,b}} (-1)^Tr(a pi(y) + h(y) + h(y + b) + b y) == 0.
/// Throws std::invalid_argument when pi is not a bijection.
bool mm_negabent_test(const PermSpec& pi, std::span<const Element> h_values, Exec exec = Exec::parallel);
bool mm_negabent_test(const MMFunction& m, Exec exec = Exec::parallel);

/// pi(y) = y^(2^i).
MMFunction homo_build(const FieldCtx& ctx, int i, const UnivariatePoly& h);
MMFunction homo_build(const FieldCtx& ctx, int i, std::vector<Element> h_values);

/// pi and pi + identity both bijective.
bool is_complete_mapping(const PermSpec& pi);

// ---------------------------------------------------------------------------
// Complete mapping families x(x^((2^N-1)/m) + a) and a x^((2^N-1)/m + 1), N = k l m,
// k the multiplicative order of 2 modulo odd m, a in GF(2^(k l))* with a^m != 1.

enum class YannVariant { pi1 = 1, pi2 = 2 };

/// Multiplicative order of 2 modulo odd m >= 1; throws for even m.
int order_of_two(int m);

struct YannParams {
  int m = 0;
  int ell = 0;
  int k = 0;
  int field_degree() const { return k * ell * m; }
};

YannParams yann_params(int m, int ell);
/// Nonzero a in GF(2^(k l)) (inside ctx, whose degree must be k l m) with a^m != 1.
std::vector<Element> yann_valid_coefficients(const FieldCtx& ctx, const YannParams& p);
/// Throws when ctx degree != k l m or a is not a valid coefficient.
PermSpec yann_mapping(const FieldCtx& ctx, const YannParams& p, Element a, YannVariant variant);

/// Backtracking search for complete mappings of GF(2^t). For t <= 3 the search is
/// exhaustive in lexicographic order; above, each result comes from a randomized
/// restart seeded by `seed`. Returns at most max_count distinct mappings.
std::vector<PermSpec> search_complete_mappings(const FieldCtx& ctx, std::size_t max_count, std::uint64_t seed = 1);

}  // namespace negabent
