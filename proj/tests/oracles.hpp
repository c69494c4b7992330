#pragma once
// Slow, independent reimplementations used only as test oracles.

#include <bit>
#include <cstdint>
#include <vector>

#include "negabent/boolfun.hpp"
#include "negabent/field.hpp"

namespace oracle {

using negabent::BooleanFunction;
using negabent::Element;

// Schoolbook shift-and-add multiplication modulo `mod` of degree n.
inline Element gf_mul(Element a, Element b, std::uint64_t mod, int n) {
  std::uint64_t acc = 0, x = a;
  for (int i = 0; i < n; ++i) {
    if ((b >> i) & 1u) acc ^= x;
    x <<= 1;
    if ((x >> n) & 1u) x ^= mod;
  }
  return static_cast<Element>(acc);
}

inline Element gf_pow(Element a, std::uint64_t e, std::uint64_t mod, int n) {
  Element r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = gf_mul(r, a, mod, n);
  return r;
}

// a + a^2 + ... + a^(2^(n-1)) by repeated squaring.
inline bool gf_trace(Element a, std::uint64_t mod, int n) {
  Element s = 0, x = a;
  for (int i = 0; i < n; ++i) {
    s ^= x;
    x = gf_mul(x, x, mod, n);
  }
  return s != 0;
}

inline int sign(bool b) { return b ? -1 : 1; }

inline std::vector<std::int64_t> walsh(const BooleanFunction& f) {
  std::vector<std::int64_t> out(f.size());
  for (std::uint32_t l = 0; l < f.size(); ++l)
    for (std::uint32_t x = 0; x < f.size(); ++x) out[l] += sign(f[x] ^ (std::popcount(l & x) & 1));
  return out;
}

// (re, im) pairs of sum_x (-1)^(f(x)+l.x) i^wt(x)
inline std::vector<std::pair<std::int64_t, std::int64_t>> nega(const BooleanFunction& f) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out(f.size());
  for (std::uint32_t l = 0; l < f.size(); ++l)
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const int s = sign(f[x] ^ (std::popcount(l & x) & 1));
      switch (std::popcount(x) % 4) {
        case 0: out[l].first += s; break;
        case 1: out[l].second += s; break;
        case 2: out[l].first -= s; break;
        default: out[l].second -= s; break;
      }
    }
  return out;
}

inline bool bent(const BooleanFunction& f) {
  if (f.num_vars() % 2) return false;
  for (auto v : oracle::walsh(f))
    if (v * v != static_cast<std::int64_t>(f.size())) return false;
  return true;
}

inline bool negabent(const BooleanFunction& f) {
  for (auto [re, im] : oracle::nega(f))
    if (re * re + im * im != static_cast<std::int64_t>(f.size())) return false;
  return true;
}

// Degree via the subset-sum definition of ANF coefficients.
inline int degree(const BooleanFunction& f) {
  int d = -1;
  for (std::uint32_t u = 0; u < f.size(); ++u) {
    bool c = false;
    for (std::uint32_t x = u;; x = (x - 1) & u) {
      c ^= f[x];
      if (x == 0) break;
    }
    if (c) d = std::max(d, std::popcount(u));
  }
  return d;
}

// x_4(x_1x_2 + x_2x_3 + x_1 + x_2) + x_5(x_1x_2 + x_2x_3 + x_3) + x_6(x_1 + x_3), x_j = bit j-1.
inline BooleanFunction cubic6() {
  return BooleanFunction::tabulate(6, [](std::uint32_t i) {
    auto x = [&](int j) { return ((i >> (j - 1)) & 1u) != 0; };
    return (x(4) && (x(1) & x(2) ^ x(2) & x(3) ^ x(1) ^ x(2))) ^ (x(5) && (x(1) & x(2) ^ x(2) & x(3) ^ x(3))) ^
           (x(6) && (x(1) ^ x(3)));
  });
}

}  // namespace oracle
