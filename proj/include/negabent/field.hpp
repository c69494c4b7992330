#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "negabent/bitmatrix.hpp"

namespace negabent {

/// Element of GF(2^n) as its coordinate bitmask in the polynomial basis
/// {1, x, ..., x^{n-1}} of the owning FieldCtx.
using Element = std::uint32_t;

inline constexpr int kMaxFieldDegree = 24;

/// Textual field identifier "gf2_<n>:<modulus-hex>", modulus including the leading term.
struct FieldSpec {
  int n = 0;
  std::uint64_t modulus = 0;

  std::string to_string() const;
  static FieldSpec parse(std::string_view text);
  bool operator==(const FieldSpec&) const = default;
};

/// Compiled-in low-weight primitive polynomial of degree n, 1 <= n <= 24.
std::uint64_t default_modulus(int n);

/// Rabin irreducibility test for a binary polynomial of degree n.
bool is_irreducible(std::uint64_t modulus, int n);

/// Arithmetic context for GF(2^n), n <= 24. Immutable after construction;
/// copies share the precomputed tables.
///
/// Besides the polynomial basis the context carries a self-dual basis
/// {a_1, ..., a_n}, Tr(a_i a_j) = [i == j]. Boolean-function indices are
/// coordinates in this basis (bit j of an index is the coefficient of a_j),
/// so Tr(x y) equals the parity of coords(x) & coords(y).
class FieldCtx {
 public:
  /// Builds the field, verifying irreducibility of the modulus and constructing
  /// the self-dual basis. Throws std::invalid_argument on bad degree or a
  /// reducible modulus.
  static FieldCtx make(int n, std::optional<std::uint64_t> modulus = std::nullopt);
  static FieldCtx make(const FieldSpec& spec) { return make(spec.n, spec.modulus); }

  int degree() const { return n_; }
  std::uint64_t modulus() const { return modulus_; }
  std::uint32_t size() const { return 1u << n_; }
  std::uint32_t mask() const { return size() - 1u; }
  FieldSpec spec() const { return {n_, modulus_}; }
  bool has_log_tables() const;

  bool contains(Element a) const { return a < size(); }

  Element add(Element a, Element b) const { return a ^ b; }
  Element mul(Element a, Element b) const;
  Element sqr(Element a) const { return mul(a, a); }
  /// a^e; 0^0 = 1.
  Element pow(Element a, std::uint64_t e) const;
  /// Throws std::domain_error for a == 0.
  Element inverse(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inverse(b)); }
  /// a^(2^j), j taken mod n.
  Element frobenius(Element a, int j) const;

  /// Absolute trace Tr_1^n(a).
  bool trace(Element a) const { return (std::popcount(a & trace_mask_) & 1) != 0; }
  /// Relative trace Tr_m^n(a) = sum_{i < n/m} a^(2^(m i)); the result lies in GF(2^m).
  /// Throws std::invalid_argument when m does not divide n.
  Element rel_trace(int m, Element a) const;
  /// Tr_1^m(a) for a in the subfield GF(2^m); throws if m does not divide n or
  /// a is outside the subfield.
  bool subfield_trace(int m, Element a) const;
  bool in_subfield(int m, Element a) const { return frobenius(a, m) == a; }

  /// Self-dual coordinates of a, as a bitmask (bit j = coefficient of a_j).
  std::uint32_t coords(Element a) const;
  Element from_coords(std::uint32_t bits) const;

  /// Rows are the self-dual basis elements in polynomial coordinates.
  const BitMatrix& self_dual_basis() const { return sd_basis_; }
  const BitMatrix& self_dual_basis_inverse() const { return sd_basis_inv_; }
  Element primitive_element() const { return generator_; }

 private:
  struct Tables;

  Element clmul_reduce(Element a, Element b) const;
  void build_self_dual_basis();
  void build_coordinate_tables();

  int n_ = 0;
  std::uint64_t modulus_ = 0;
  std::uint32_t trace_mask_ = 0;
  Element generator_ = 1;
  BitMatrix sd_basis_;
  BitMatrix sd_basis_inv_;
  std::shared_ptr<const Tables> tables_;
  // byte-sliced linear maps: poly coords -> self-dual coords and back
  std::shared_ptr<const std::array<std::array<std::uint32_t, 256>, 3>> to_sd_;
  std::shared_ptr<const std::array<std::array<std::uint32_t, 256>, 3>> from_sd_;
};

}  // namespace negabent
