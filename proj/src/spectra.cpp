#include "negabent/spectra.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "negabent/parallel.hpp"

namespace negabent {

namespace {

inline std::int64_t sign(bool bit) { return bit ? -1 : 1; }

// i^k for k mod 4
constexpr Gaussian kIPowers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::vector<std::int64_t> autocorrelation(const BooleanFunction& f, bool nega) {
  std::vector<std::int64_t> out(f.size());
  const auto size = static_cast<std::int64_t>(f.size());
  for_range(0, size, [&](std::int64_t ai) {
    const auto a = static_cast<std::uint32_t>(ai);
    std::int64_t acc = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      bool e = f[x] != f[x ^ a];
      if (nega) e = e != ((std::popcount(x & a) & 1) != 0);
      acc += sign(e);
    }
    out[a] = acc;
  });
  return out;
}

}  // namespace

WalshSpectrum walsh(const BooleanFunction& f) {
  WalshSpectrum s{f.num_vars(), std::vector<std::int64_t>(f.size())};
  auto& v = s.values;
  for (std::uint32_t x = 0; x < f.size(); ++x) v[x] = sign(f[x]);
  for (std::size_t h = 1; h < v.size(); h <<= 1)
    for (std::size_t i = 0; i < v.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const auto a = v[j], b = v[j + h];
        v[j] = a + b;
        v[j + h] = a - b;
      }
  return s;
}

NegaSpectrum nega(const BooleanFunction& f) {
  NegaSpectrum s{f.num_vars(), std::vector<Gaussian>(f.size())};
  auto& v = s.values;
  for (std::uint32_t x = 0; x < f.size(); ++x) v[x] = {sign(f[x]), 0};
  for (std::size_t h = 1; h < v.size(); h <<= 1)
    for (std::size_t i = 0; i < v.size(); i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) {
        const Gaussian a = v[j], b = v[j + h];
        // i * b = (-b.im, b.re)
        v[j] = {a.re - b.im, a.im + b.re};
        v[j + h] = {a.re + b.im, a.im - b.re};
      }
  return s;
}

std::vector<std::int64_t> periodic_acf(const BooleanFunction& f) { return autocorrelation(f, false); }

std::vector<std::int64_t> negaperiodic_acf(const BooleanFunction& f) { return autocorrelation(f, true); }

std::vector<std::uint32_t> flatness_violations(const WalshSpectrum& s) {
  const std::int64_t target = std::int64_t{1} << s.n;
  std::vector<std::uint32_t> out;
  for (std::uint32_t l = 0; l < s.values.size(); ++l)
    if (s.values[l] * s.values[l] != target) out.push_back(l);
  return out;
}

std::vector<std::uint32_t> flatness_violations(const NegaSpectrum& s) {
  const std::int64_t target = std::int64_t{1} << s.n;
  std::vector<std::uint32_t> out;
  for (std::uint32_t l = 0; l < s.values.size(); ++l)
    if (s.values[l].norm() != target) out.push_back(l);
  return out;
}

std::int64_t max_abs_sq(const WalshSpectrum& s) {
  std::int64_t m = 0;
  for (auto v : s.values) m = std::max(m, v * v);
  return m;
}

std::int64_t max_abs_sq(const NegaSpectrum& s) {
  std::int64_t m = 0;
  for (const auto& v : s.values) m = std::max(m, v.norm());
  return m;
}

bool is_bent(const BooleanFunction& f) {
  if (f.num_vars() % 2 != 0) return false;
  const auto s = walsh(f);
  const std::int64_t target = std::int64_t{1} << f.num_vars();
  return std::all_of(s.values.begin(), s.values.end(), [&](std::int64_t v) { return v * v == target; });
}

bool is_negabent(const BooleanFunction& f) {
  const auto s = nega(f);
  const std::int64_t target = std::int64_t{1} << f.num_vars();
  return std::all_of(s.values.begin(), s.values.end(), [&](const Gaussian& v) { return v.norm() == target; });
}

bool is_bent_negabent(const BooleanFunction& f) { return is_bent(f) && is_negabent(f); }

BitMatrix symplectic_matrix(const BooleanFunction& f) {
  const int n = f.num_vars();
  const Anf a = anf(f);
  BitMatrix b(n, n);
  for (std::uint32_t m = 0; m < a.coeffs.size(); ++m) {
    if (!a.coeffs[m]) continue;
    const int w = std::popcount(m);
    if (w > 2) throw std::invalid_argument("symplectic matrix requires degree <= 2");
    if (w == 2) {
      const int i = std::countr_zero(m);
      const int j = 31 - std::countl_zero(m);
      b.set(i, j, true);
      b.set(j, i, true);
    }
  }
  return b;
}

QuadVerdict quad_rank_oracle(const BooleanFunction& f) {
  const int n = f.num_vars();
  const BitMatrix b = symplectic_matrix(f);
  return {b.rank() == n, (b + BitMatrix::identity(n)).rank() == n};
}

namespace reference {

WalshSpectrum walsh_direct(const BooleanFunction& f) {
  WalshSpectrum s{f.num_vars(), std::vector<std::int64_t>(f.size())};
  for (std::uint32_t l = 0; l < f.size(); ++l) {
    std::int64_t acc = 0;
    for (std::uint32_t x = 0; x < f.size(); ++x) acc += sign(f[x] != ((std::popcount(l & x) & 1) != 0));
    s.values[l] = acc;
  }
  return s;
}

NegaSpectrum nega_direct(const BooleanFunction& f) {
  NegaSpectrum s{f.num_vars(), std::vector<Gaussian>(f.size())};
  for (std::uint32_t l = 0; l < f.size(); ++l) {
    Gaussian acc;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      const std::int64_t sg = sign(f[x] != ((std::popcount(l & x) & 1) != 0));
      const Gaussian ip = kIPowers[std::popcount(x) & 3];
      acc.re += sg * ip.re;
      acc.im += sg * ip.im;
    }
    s.values[l] = acc;
  }
  return s;
}

}  // namespace reference

}  // namespace negabent
