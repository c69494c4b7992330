#include "negabent/mm.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace negabent {

namespace {

BooleanFunction realize_mm(const PermSpec& pi, std::span<const Element> h_values) {
  const FieldCtx& ctx = pi.ctx;
  const int t = ctx.degree();
  BooleanFunction f(2 * t);
  const std::uint32_t q = ctx.size();
  for (std::uint32_t yi = 0; yi < q; ++yi) {
    const Element y = ctx.from_coords(yi);
    const Element py = pi(y);
    const bool hy = ctx.trace(h_values[y]);
    for (std::uint32_t xi = 0; xi < q; ++xi) {
      const Element x = ctx.from_coords(xi);
      f.set(xi | (yi << t), ctx.trace(ctx.mul(x, py)) != hy);
    }
  }
  return f;
}

class CompleteMappingSearch {
 public:
  CompleteMappingSearch(std::uint32_t q, bool randomized, std::uint64_t seed)
      : q_(q), randomized_(randomized), rng_(seed), pi_(q), used_val_(q), used_sum_(q) {}

  /// Visits complete mappings until visit returns false or the node budget runs out.
  /// Returns false when the budget was exhausted.
  bool run(const std::function<bool(const std::vector<Element>&)>& visit, std::uint64_t budget) {
    budget_ = budget;
    nodes_ = 0;
    std::fill(used_val_.begin(), used_val_.end(), 0);
    std::fill(used_sum_.begin(), used_sum_.end(), 0);
    stop_ = false;
    exhausted_ = false;
    dfs(0, visit);
    return !exhausted_;
  }

 private:
  void dfs(std::uint32_t y, const std::function<bool(const std::vector<Element>&)>& visit) {
    if (stop_ || exhausted_) return;
    if (y == q_) {
      if (!visit(pi_)) stop_ = true;
      return;
    }
    if (budget_ && ++nodes_ > budget_) {
      exhausted_ = true;
      return;
    }
    std::vector<Element> cand;
    for (Element v = 0; v < q_; ++v)
      if (!used_val_[v] && !used_sum_[v ^ y]) cand.push_back(v);
    if (randomized_) std::shuffle(cand.begin(), cand.end(), rng_);
    for (Element v : cand) {
      pi_[y] = v;
      used_val_[v] = used_sum_[v ^ y] = 1;
      dfs(y + 1, visit);
      used_val_[v] = used_sum_[v ^ y] = 0;
      if (stop_ || exhausted_) return;
    }
  }

  std::uint32_t q_;
  bool randomized_;
  std::mt19937_64 rng_;
  std::vector<Element> pi_;
  std::vector<std::uint8_t> used_val_, used_sum_;
  std::uint64_t budget_ = 0, nodes_ = 0;
  bool stop_ = false, exhausted_ = false;
};

}  // namespace

// ---------------------------------------------------------------------------

PermSpec PermSpec::from_poly(const FieldCtx& ctx, const UnivariatePoly& poly) { return {ctx, poly.table(ctx)}; }

PermSpec PermSpec::identity(const FieldCtx& ctx) {
  PermSpec p{ctx, std::vector<Element>(ctx.size())};
  std::iota(p.table.begin(), p.table.end(), Element{0});
  return p;
}

PermSpec PermSpec::scaled(const FieldCtx& ctx, Element c) {
  PermSpec p{ctx, std::vector<Element>(ctx.size())};
  for (Element y = 0; y < ctx.size(); ++y) p.table[y] = ctx.mul(c, y);
  return p;
}

bool is_bijection(std::span<const Element> table) {
  std::vector<std::uint8_t> seen(table.size(), 0);
  for (Element v : table) {
    if (v >= table.size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool PermSpec::is_bijective() const { return table.size() == ctx.size() && is_bijection(table); }

bool PermSpec::is_affine() const {
  const Element c = table[0];
  for (Element x = 1; x < table.size(); ++x)
    for (Element y = x + 1; y < table.size(); ++y)
      if (table[x ^ y] != (table[x] ^ table[y] ^ c)) return false;
  return true;
}

PermSpec PermSpec::plus_identity() const {
  PermSpec p = *this;
  for (Element y = 0; y < p.table.size(); ++y) p.table[y] ^= y;
  return p;
}

MMFunction mm_build(const PermSpec& pi, std::vector<Element> h_values) {
  if (pi.table.size() != pi.ctx.size() || h_values.size() != pi.ctx.size())
    throw std::invalid_argument("pi and h must be tables over the same field");
  for (Element v : h_values)
    if (!pi.ctx.contains(v)) throw std::invalid_argument("h value outside the field");
  BooleanFunction f = realize_mm(pi, h_values);
  return {pi, std::move(h_values), std::move(f)};
}

MMFunction mm_build(const PermSpec& pi, const UnivariatePoly& h) { return mm_build(pi, h.table(pi.ctx)); }

std::vector<Element> y_set(const PermSpec& pi, Element a, Element b) {
  std::vector<Element> out;
  for (Element y = 0; y < pi.ctx.size(); ++y)
    if ((pi(y) ^ pi(y ^ b)) == a) out.push_back(y);
  return out;
}

bool mm_negabent_test(const PermSpec& pi, std::span<const Element> h_values, Exec exec) {
  if (!pi.is_bijective()) throw std::invalid_argument("MM negabent criterion requires a bijective pi");
  if (h_values.size() != pi.ctx.size()) throw std::invalid_argument("h table size mismatch");
  const FieldCtx& ctx = pi.ctx;
  const std::uint32_t q = ctx.size();
  // For fixed b, every y lies in exactly one Y_{a,b} (a = pi(y) + pi(y+b) != 0),
  // so one pass over y accumulates all the signed sums for that b.
  return all_of_range(
      1, q,
      [&](std::int64_t bi) {
        const auto b = static_cast<Element>(bi);
        std::vector<std::int64_t> sums(q, 0);
        for (Element y = 0; y < q; ++y) {
          const Element a = pi(y) ^ pi(y ^ b);
          const Element arg = ctx.mul(a, pi(y)) ^ h_values[y] ^ h_values[y ^ b] ^ ctx.mul(b, y);
          sums[a] += ctx.trace(arg) ? -1 : 1;
        }
        return std::all_of(sums.begin() + 1, sums.end(), [](std::int64_t s) { return s == 0; });
      },
      exec);
}

bool mm_negabent_test(const MMFunction& m, Exec exec) { return mm_negabent_test(m.pi, m.h_values, exec); }

MMFunction homo_build(const FieldCtx& ctx, int i, std::vector<Element> h_values) {
  if (i < 0 || i >= ctx.degree()) throw std::invalid_argument("Frobenius index must be in [0, t)");
  PermSpec pi{ctx, std::vector<Element>(ctx.size())};
  for (Element y = 0; y < ctx.size(); ++y) pi.table[y] = ctx.frobenius(y, i);
  return mm_build(pi, std::move(h_values));
}

MMFunction homo_build(const FieldCtx& ctx, int i, const UnivariatePoly& h) { return homo_build(ctx, i, h.table(ctx)); }

bool is_complete_mapping(const PermSpec& pi) { return pi.is_bijective() && pi.plus_identity().is_bijective(); }

// ---------------------------------------------------------------------------

int order_of_two(int m) {
  if (m < 1 || m % 2 == 0) throw std::invalid_argument("order of 2 needs odd m >= 1, got " + std::to_string(m));
  if (m == 1) return 1;
  int k = 1;
  for (int v = 2 % m; v != 1; v = (2 * v) % m) ++k;
  return k;
}

YannParams yann_params(int m, int ell) {
  if (ell < 1) throw std::invalid_argument("l must be positive");
  const int k = order_of_two(m);
  return {m, ell, k};
}

std::vector<Element> yann_valid_coefficients(const FieldCtx& ctx, const YannParams& p) {
  if (ctx.degree() != p.field_degree())
    throw std::invalid_argument("field degree " + std::to_string(ctx.degree()) + " != k l m = " +
                                std::to_string(p.field_degree()));
  std::vector<Element> out;
  const int sub = p.k * p.ell;
  for (Element a = 1; a < ctx.size(); ++a)
    if (ctx.in_subfield(sub, a) && ctx.pow(a, static_cast<std::uint64_t>(p.m)) != 1) out.push_back(a);
  return out;
}

PermSpec yann_mapping(const FieldCtx& ctx, const YannParams& p, Element a, YannVariant variant) {
  const auto valid = yann_valid_coefficients(ctx, p);
  if (!std::binary_search(valid.begin(), valid.end(), a))
    throw std::invalid_argument("coefficient is not a nonzero element of GF(2^(k l)) with a^m != 1");
  const std::uint64_t e = ((std::uint64_t{1} << ctx.degree()) - 1) / static_cast<std::uint64_t>(p.m);
  PermSpec pi{ctx, std::vector<Element>(ctx.size())};
  for (Element x = 0; x < ctx.size(); ++x) {
    pi.table[x] = variant == YannVariant::pi1 ? ctx.mul(x, ctx.pow(x, e) ^ a) : ctx.mul(a, ctx.pow(x, e + 1));
  }
  return pi;
}

std::vector<PermSpec> search_complete_mappings(const FieldCtx& ctx, std::size_t max_count, std::uint64_t seed) {
  std::vector<PermSpec> found;
  if (max_count == 0) return found;
  const std::uint32_t q = ctx.size();
  const bool exhaustive = ctx.degree() <= 3;
  CompleteMappingSearch search(q, !exhaustive, seed);

  if (exhaustive) {
    search.run(
        [&](const std::vector<Element>& pi) {
          found.push_back({ctx, pi});
          return found.size() < max_count;
        },
        0);
    return found;
  }

  // Randomized restarts; a bounded number of attempts keeps the call total.
  const std::uint64_t budget = 50ull * q * q;
  for (std::size_t attempt = 0; attempt < 64 * max_count && found.size() < max_count; ++attempt) {
    search.run(
        [&](const std::vector<Element>& pi) {
          const bool dup = std::any_of(found.begin(), found.end(), [&](const PermSpec& p) { return p.table == pi; });
          if (!dup) found.push_back({ctx, pi});
          return false;
        },
        budget);
  }
  return found;
}

}  // namespace negabent
