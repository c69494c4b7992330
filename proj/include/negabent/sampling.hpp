#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "negabent/boolfun.hpp"
#include "negabent/field.hpp"
#include "negabent/mm.hpp"

namespace negabent {

using Rng = std::mt19937_64;

inline BooleanFunction random_function(int n, Rng& rng) {
  std::bernoulli_distribution coin(0.5);
  return BooleanFunction::tabulate(n, [&](std::uint32_t) { return coin(rng); });
}

/// Quadratic with coefficient vector `code`: bits [0, n(n-1)/2) select the pairs
/// x_i x_j (i < j, lexicographic), the next n bits the linear terms, the last the constant.
inline BooleanFunction quadratic_from_code(int n, std::uint64_t code) {
  Anf a{n, std::vector<std::uint8_t>(std::size_t{1} << n, 0)};
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if ((code >> bit) & 1u) a.coeffs[(std::size_t{1} << i) | (std::size_t{1} << j)] = 1;
  for (int i = 0; i < n; ++i, ++bit)
    if ((code >> bit) & 1u) a.coeffs[std::size_t{1} << i] = 1;
  if ((code >> bit) & 1u) a.coeffs[0] = 1;
  return from_anf(a);
}

inline int quadratic_code_bits(int n) { return n * (n - 1) / 2 + n + 1; }

inline BooleanFunction random_quadratic(int n, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(0, (std::uint64_t{1} << quadratic_code_bits(n)) - 1);
  return quadratic_from_code(n, dist(rng));
}

inline BooleanFunction random_affine(int n, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << n) - 1);
  std::bernoulli_distribution coin(0.5);
  return linear_function(n, dist(rng), coin(rng));
}

inline PermSpec random_permutation(const FieldCtx& ctx, Rng& rng) {
  PermSpec p = PermSpec::identity(ctx);
  std::shuffle(p.table.begin(), p.table.end(), rng);
  return p;
}

/// Uniformly random map of the field (almost never a bijection for t >= 2).
inline PermSpec random_map(const FieldCtx& ctx, Rng& rng) {
  std::uniform_int_distribution<Element> dist(0, ctx.mask());
  PermSpec p{ctx, std::vector<Element>(ctx.size())};
  for (auto& v : p.table) v = dist(rng);
  return p;
}

inline std::vector<Element> random_values(const FieldCtx& ctx, Rng& rng) {
  std::uniform_int_distribution<Element> dist(0, ctx.mask());
  std::vector<Element> v(ctx.size());
  for (auto& e : v) e = dist(rng);
  return v;
}

inline UnivariatePoly random_poly(const FieldCtx& ctx, int terms, Rng& rng) {
  std::uniform_int_distribution<Element> coef(1, ctx.mask());
  std::uniform_int_distribution<std::uint64_t> exp(0, ctx.mask());
  UnivariatePoly p;
  for (int i = 0; i < terms; ++i) p.add_term(coef(rng), exp(rng), ctx.degree());
  return p;
}

inline AffineTransform random_affine_transform(int n, Rng& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, (1u << n) - 1);
  std::bernoulli_distribution coin(0.5);
  for (;;) {
    BitMatrix a(n, n);
    for (int i = 0; i < n; ++i) a.row(i) = dist(rng);
    if (a.rank() == n) return {a, dist(rng), dist(rng), coin(rng)};
  }
}

}  // namespace negabent
