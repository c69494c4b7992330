#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "negabent/bitmatrix.hpp"
#include "negabent/boolfun.hpp"
#include "negabent/field.hpp"
#include "negabent/mm.hpp"

namespace negabent {

/// Q(x) = sum_{i=1}^{n/2-1} Tr(x^(2^i+1)) + Tr_1^{n/2}(x^(2^(n/2)+1)) over GF(2^n).
/// Throws for odd n.
BooleanFunction q_function(const FieldCtx& ctx);

/// Checks Q(x) + Q(x + a) = Tr(a)Tr(x) + Tr(ax) + (Q(a) + Q(0)) for every x.
bool q_derivative_check(const FieldCtx& ctx, Element a);

/// f + Q. Throws for odd n or when f does not live on ctx.
BooleanFunction transport(const FieldCtx& ctx, const BooleanFunction& f);

/// sum_x (-1)^(f(x) + f(x + a) + Tr(beta x)).
std::int64_t hyperplane_sum(const FieldCtx& ctx, const BooleanFunction& f, Element beta, Element a);

/// x^T U x + l.x + c with B = U + U^T (symmetric, zero diagonal).
struct QuadraticForm {
  int n = 0;
  BitMatrix B;
  std::uint32_t l = 0;
  bool c = false;

  /// Throws std::invalid_argument when deg f > 2.
  static QuadraticForm from_function(const BooleanFunction& f);
  BooleanFunction to_function() const;
  bool is_bent() const { return B.rank() == n; }
};

/// Basis vectors e_1, f_1, ..., e_m, f_m of a nondegenerate alternating form with
/// B(e_i, f_i) = 1 and all other pairings 0, returned as the rows of a matrix.
BitMatrix symplectic_basis(const BitMatrix& B);

/// Affine T with compose_affine(q1, T) == q2 pointwise. The translation b absorbs the
/// linear difference, so T.l == 0. Throws when either form is not bent or n differs.
AffineTransform quad_equivalence(const QuadraticForm& q1, const QuadraticForm& q2);

/// G(x, y) = Tr_1^t(x y) on 2t variables with the Maiorana-McFarland block layout.
BooleanFunction inner_product_function(const FieldCtx& ctx_t);

/// Q(x, y) = G(a1 x + a2, a3 y + a4) + Tr(b x) + Tr(g y) + c over GF(2^t) x GF(2^t).
struct BlockRelation {
  Element alpha1 = 0, alpha2 = 0, alpha3 = 0, alpha4 = 0;
  Element beta = 0, gamma = 0;
  bool c = false;
};
/// Decides whether the 2t-variable function q admits a block-structured relation with G.
/// G(a1 x + a2, a3 y + a4) has quadratic part Tr(a1 a3 x y), so the search runs over
/// p = a1 a3 and tests whether q + Tr(p x y) is affine; exact for every t.
std::optional<BlockRelation> find_block_relation(const FieldCtx& ctx_t, const BooleanFunction& q);

struct Construction {
  BooleanFunction F;
  BooleanFunction mm_part;  // f(x, y) = Tr(x pi(y)) + Tr(h(y))
  AffineTransform transform;
  int degree = 0;
  bool bent = false;
  bool negabent = false;
  bool q_shift_bent = false;    // F + Q bent
  bool q_shift_matches = false;  // F + Q == f composed with the input part of T
  std::string pi_source;
};

/// F = (f + G) o T with compose_affine(G, T) = Q; pi must be a complete mapping of GF(2^t).
/// When T is given it must satisfy the same relation. Verdicts are computed, not assumed.
Construction construct_F(const PermSpec& pi, const std::vector<Element>& h_values,
                         const std::optional<AffineTransform>& T = std::nullopt);
Construction construct_F(const PermSpec& pi, const UnivariatePoly& h,
                         const std::optional<AffineTransform>& T = std::nullopt);

enum class CmSource { yann1, yann2, search };
CmSource parse_cm_source(const std::string& name);
std::string to_string(CmSource s);

/// Complete mapping of GF(2^t) from the requested source. For yann sources the
/// parameters (m >= 3 odd, l) with k l m = t are resolved with the smallest m that
/// admits a valid coefficient; throws std::invalid_argument when none exists.
/// The search source prefers a non-affine mapping.
PermSpec resolve_complete_mapping(const FieldCtx& ctx_t, CmSource source, std::uint64_t seed, std::string* description = nullptr);

/// construct_F with h(y) = y^(2^(n/2) - 1); n even, n >= 4.
Construction optimal_degree_construction(int n, CmSource source, std::uint64_t seed = 1);

}  // namespace negabent
