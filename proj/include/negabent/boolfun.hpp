#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "negabent/bitmatrix.hpp"
#include "negabent/field.hpp"

namespace negabent {

/// Degree reported for the identically-zero function.
inline constexpr int kZeroFunctionDegree = std::numeric_limits<int>::min();

/// Truth table of an n-variable Boolean function; entry i is f at the point
/// whose self-dual coordinates are the bits of i.
class BooleanFunction {
 public:
  BooleanFunction() = default;
  explicit BooleanFunction(int n);
  BooleanFunction(int n, std::vector<std::uint8_t> bits);

  template <typename Fn>
  static BooleanFunction tabulate(int n, Fn&& fn) {
    BooleanFunction f(n);
    for (std::uint32_t i = 0; i < f.size(); ++i) f.tt_[i] = fn(i) ? 1 : 0;
    return f;
  }

  int num_vars() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(tt_.size()); }
  bool operator[](std::uint32_t i) const { return tt_[i] != 0; }
  void set(std::uint32_t i, bool v) { tt_[i] = v ? 1 : 0; }
  std::span<const std::uint8_t> bits() const { return tt_; }

  std::uint32_t weight() const;
  bool is_balanced() const { return n_ >= 1 && weight() == size() / 2; }
  bool is_constant() const;
  bool operator==(const BooleanFunction&) const = default;

 private:
  int n_ = 0;
  std::vector<std::uint8_t> tt_;
};

/// Coefficients of the algebraic normal form: coeffs[a] is the coefficient of
/// the monomial prod_{j in a} x_j.
struct Anf {
  int n = 0;
  std::vector<std::uint8_t> coeffs;
};

/// In-place binary Moebius transform (an involution).
void moebius_inplace(std::span<std::uint8_t> values);

Anf anf(const BooleanFunction& f);
BooleanFunction from_anf(const Anf& a);
int degree(const Anf& a);
int degree(const BooleanFunction& f);

BooleanFunction operator^(const BooleanFunction& f, const BooleanFunction& g);
/// x -> f(x) xor f(x xor a)
BooleanFunction derivative(const BooleanFunction& f, std::uint32_t a);
/// Nonzero a for which the derivative in direction a is constant.
std::vector<std::uint32_t> linear_structures(const BooleanFunction& f);
/// x -> <mask, x> xor c
BooleanFunction linear_function(int n, std::uint32_t mask, bool c = false);

// ---------------------------------------------------------------------------

/// Univariate polynomial sum c_e x^e over GF(2^n) with distinct exponents.
/// Exponents are normalized with x^(2^n) = x, so they stay in [0, 2^n - 1].
class UnivariatePoly {
 public:
  struct Term {
    Element coef;
    std::uint64_t exp;
    bool operator==(const Term&) const = default;
  };

  UnivariatePoly() = default;
  static UnivariatePoly monomial(Element coef, std::uint64_t exp, int n);
  /// Parses comma-separated "coefhex*x^exp" terms ("x^e" alone means coefficient 1).
  static UnivariatePoly parse(std::string_view text, const FieldCtx& ctx);

  /// Adds c x^e, merging with an existing term of the same exponent.
  void add_term(Element coef, std::uint64_t exp, int n);
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Element evaluate(const FieldCtx& ctx, Element x) const;
  /// Value table indexed by polynomial-basis element.
  std::vector<Element> table(const FieldCtx& ctx) const;
  /// Max binary weight of the exponents (an upper bound on the degree of Tr(F)).
  int algebraic_degree() const;
  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

/// x^e normalized into [0, 2^n - 1] using x^(2^n) = x.
std::uint64_t normalize_exponent(std::uint64_t e, int n);

/// f(i) = Tr(F(from_coords(i))).
BooleanFunction from_trace_poly(const FieldCtx& ctx, const UnivariatePoly& poly);
/// f(i) = Tr(value(from_coords(i))) for an arbitrary map of the field.
BooleanFunction from_trace_map(const FieldCtx& ctx, const std::function<Element(Element)>& value);

// ---------------------------------------------------------------------------

/// x -> f(A x + b) + <l, x> + c with A invertible.
struct AffineTransform {
  BitMatrix A;
  std::uint32_t b = 0;
  std::uint32_t l = 0;
  bool c = false;

  static AffineTransform identity(int n);
  int dim() const { return A.rows(); }
  /// The input part (A, b) alone.
  AffineTransform input_part() const { return {A, b, 0, false}; }
};

/// Throws std::invalid_argument if A is singular or dimensions mismatch.
BooleanFunction compose_affine(const BooleanFunction& f, const AffineTransform& t);

}  // namespace negabent
