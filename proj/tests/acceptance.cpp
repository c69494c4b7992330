// Acceptance suite: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "negabent/bridge.hpp"
#include "negabent/mm.hpp"
#include "negabent/monomials.hpp"
#include "negabent/sampling.hpp"
#include "negabent/spectra.hpp"

using namespace negabent;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

void fail(Outcome& o, const std::string& why) {
  if (o.ok) o.detail = why;
  o.ok = false;
}

bool all_zero_but_first(const std::vector<std::int64_t>& v) {
  for (size_t i = 1; i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

std::vector<Element> table_from_code(std::uint32_t code) {
  std::vector<Element> h(4);
  for (int y = 0; y < 4; ++y) h[static_cast<size_t>(y)] = (code >> (2 * y)) & 3u;
  return h;
}

// 1. NHT-negabent = P permutation = Z_t != 0 = outside the root-form set.
Outcome four_way() {
  Outcome o;
  std::size_t cases = 0;
  for (int n = 4; n <= 12; n += 2) {
    const FieldCtx ctx = FieldCtx::make(n);
    for (int k = 1; k < n; ++k)
      for (const auto& r : MonomialClass(ctx, k).sweep()) {
        if (r.lambda == 0) continue;
        ++cases;
        if (!(r.negabent == r.p_permutation && r.negabent == !r.zt_zero && r.negabent == !r.in_root_set))
          fail(o, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " lambda=" + std::to_string(r.lambda));
      }
  }
  o.detail = o.ok ? std::to_string(cases) + " (n,k,lambda) triples" : o.detail;
  return o;
}

// 2. Enumerated root-set size equals the closed form.
Outcome root_counts() {
  Outcome o;
  if (zt_root_set(FieldCtx::make(4), 1).size() != 10) fail(o, "(4,1) does not give 10 roots");
  int cases = 0;
  for (int n = 4; n <= 12; n += 2) {
    const FieldCtx ctx = FieldCtx::make(n);
    for (int k = 1; k < n; ++k, ++cases) {
      const auto got = zt_root_set(ctx, k).size();
      const auto want = zt_root_count_formula(n, k);
      if (got != want)
        fail(o, "n=" + std::to_string(n) + " k=" + std::to_string(k) + ": " + std::to_string(got) + " vs " +
                    std::to_string(want));
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (n,k) pairs, (4,1) -> 10";
  return o;
}

// 3. Bent counts on GF(16) from Walsh sweeps.
Outcome bent_counts() {
  Outcome o;
  const FieldCtx ctx = FieldCtx::make(4);
  int bent1 = 0, both2 = 0;
  for (Element l = 1; l < 16; ++l) {
    bent1 += is_bent(gold_function(ctx, l, 1));
    const BooleanFunction f = gold_function(ctx, l, 2);
    const bool bn = is_bent(f) && is_negabent(f);
    both2 += bn;
    const Element s = l ^ ctx.frobenius(l, 2);
    if (bn != (s > 1)) fail(o, "(4,2) lambda=" + std::to_string(l) + " disagrees with lambda + lambda^4 outside GF(2)");
  }
  if (bent1 != 10) fail(o, "(4,1) bent count " + std::to_string(bent1));
  if (both2 != 8) fail(o, "(4,2) bent-negabent count " + std::to_string(both2));
  if (o.ok) o.detail = "(4,1) bent=10, (4,2) bent-negabent=8";
  return o;
}

// 4. Counting bound for gcd(2^k + 1, 2^n - 1) > 1.
Outcome census() {
  Outcome o;
  int cases = 0;
  for (int n = 4; n <= 12; n += 2) {
    const FieldCtx ctx = FieldCtx::make(n);
    for (int k = 1; k < n; ++k) {
      const auto c = existence_census(ctx, k);
      if (c.gold_gcd <= 1) continue;
      ++cases;
      if (!(c.surplus >= 1 && c.surplus >= c.intersection + 1))
        fail(o, "n=" + std::to_string(n) + " k=" + std::to_string(k) + " surplus=" + std::to_string(c.surplus));
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " (n,k) pairs";
  return o;
}

// 5. f bent -> f + Q negabent, f negabent -> f + Q bent.
Outcome transport_theorem() {
  Outcome o;
  {
    const FieldCtx ctx = FieldCtx::make(4);
    int nb = 0, nn = 0;
    for (std::uint64_t code = 0; code < (1u << quadratic_code_bits(4)); ++code) {
      const BooleanFunction f = quadratic_from_code(4, code);
      const QuadVerdict v = quad_rank_oracle(f);
      const BooleanFunction g = transport(ctx, f);
      if (v.bent && (++nb, !is_negabent(g))) fail(o, "n=4 bent quadratic code " + std::to_string(code));
      if (v.negabent && (++nn, !is_bent(g))) fail(o, "n=4 negabent quadratic code " + std::to_string(code));
    }
    if (o.ok) o.detail = "n=4: " + std::to_string(nb) + " bent, " + std::to_string(nn) + " negabent quadratics";
  }
  Rng rng(2024);
  for (int n : {6, 8}) {
    const FieldCtx ctx = FieldCtx::make(n);
    const FieldCtx ctx_t = FieldCtx::make(n / 2);
    for (int s = 0; s < 1000; ++s) {
      const BooleanFunction f = mm_build(random_permutation(ctx_t, rng), random_values(ctx_t, rng)).f;
      if (!is_bent(f)) fail(o, "MM sample not bent");
      const BooleanFunction g = transport(ctx, f);
      if (!is_negabent(g)) fail(o, "n=" + std::to_string(n) + " MM bent sample " + std::to_string(s));
      // negabent inputs: affine functions, and the transported bent ones
      const BooleanFunction a = s % 2 ? random_affine(n, rng) : g;
      if (!is_negabent(a)) fail(o, "negabent sample not negabent");
      if (!is_bent(transport(ctx, a))) fail(o, "n=" + std::to_string(n) + " negabent sample " + std::to_string(s));
    }
  }
  if (o.ok) o.detail += "; n=6,8: 1000 bent + 1000 negabent each";
  return o;
}

// 6. Y_{a,b} criterion vs spectrum, and the homomorphic biconditional.
Outcome mm_criterion() {
  Outcome o;
  std::size_t cases = 0;
  {
    const FieldCtx ctx = FieldCtx::make(2);
    std::vector<Element> p = {0, 1, 2, 3};
    do {
      const PermSpec pi{ctx, p};
      for (std::uint32_t code = 0; code < 256; ++code, ++cases) {
        const MMFunction m = mm_build(pi, table_from_code(code));
        if (mm_negabent_test(m) != is_negabent(m.f)) fail(o, "t=2 pi/h code " + std::to_string(code));
      }
    } while (std::next_permutation(p.begin(), p.end()));
    for (int i = 0; i < 2; ++i)
      for (std::uint32_t code = 0; code < 256; ++code, ++cases) {
        const auto h = table_from_code(code);
        const MMFunction m = homo_build(ctx, i, h);
        if (is_negabent(m.f) != is_bent(from_trace_map(ctx, [&](Element y) { return h[y]; })))
          fail(o, "homomorphic t=2 code " + std::to_string(code));
      }
  }
  Rng rng(77);
  for (int t : {3, 4}) {
    const FieldCtx ctx = FieldCtx::make(t);
    std::uniform_int_distribution<int> idx(0, t - 1);
    for (int s = 0; s < 1000; ++s, cases += 2) {
      const MMFunction m = mm_build(random_permutation(ctx, rng), random_values(ctx, rng));
      if (mm_negabent_test(m) != is_negabent(m.f)) fail(o, "t=" + std::to_string(t) + " random sample " + std::to_string(s));
      const auto h = random_values(ctx, rng);
      const MMFunction hm = homo_build(ctx, idx(rng), h);
      if (is_negabent(hm.f) != is_bent(from_trace_map(ctx, [&](Element y) { return h[y]; })))
        fail(o, "homomorphic t=" + std::to_string(t) + " sample " + std::to_string(s));
    }
  }
  if (o.ok) o.detail = std::to_string(cases) + " functions";
  return o;
}

// 7. Degree-n/2 bent-negabent construction.
Outcome optimal_degree() {
  Outcome o;
  for (int n : {8, 12}) {
    const auto start = std::chrono::steady_clock::now();
    const Construction c = optimal_degree_construction(n, CmSource::search, 1);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool bn = is_bent_negabent(c.F);
    if (!bn) fail(o, "n=" + std::to_string(n) + " not bent-negabent");
    if (degree(c.F) != n / 2) fail(o, "n=" + std::to_string(n) + " degree " + std::to_string(degree(c.F)));
    if (n == 12 && secs > 30) fail(o, "n=12 took " + std::to_string(secs) + " s");
    if (o.ok) o.detail += (o.detail.empty() ? "" : ", ") + ("n=" + std::to_string(n) + " in " + std::to_string(secs) + " s");
  }
  return o;
}

// 8. Fast transforms vs direct sums, rank oracle vs spectra, negaperiodic ACF vs NHT.
Outcome consistency() {
  Outcome o;
  for (int n = 0; n <= 4; ++n)
    for (std::uint32_t code = 0; code < (1u << (1u << n)); ++code) {
      const BooleanFunction f = BooleanFunction::tabulate(n, [&](std::uint32_t i) { return (code >> i) & 1u; });
      if (!(nega(f).values == reference::nega_direct(f).values)) fail(o, "NHT n=" + std::to_string(n));
      if (walsh(f).values != reference::walsh_direct(f).values) fail(o, "WHT n=" + std::to_string(n));
    }
  Rng rng(8);
  for (int s = 0; s < 1000; ++s) {
    const BooleanFunction f = random_function(8, rng);
    if (!(nega(f).values == reference::nega_direct(f).values)) fail(o, "NHT n=8 sample " + std::to_string(s));
  }
  for (std::uint64_t code = 0; code < (1u << quadratic_code_bits(4)); ++code) {
    const BooleanFunction f = quadratic_from_code(4, code);
    const QuadVerdict v = quad_rank_oracle(f);
    if (v.bent != is_bent(f) || v.negabent != is_negabent(f)) fail(o, "rank oracle code " + std::to_string(code));
  }
  int negabent_seen = 0;
  for (int s = 0; s < 1000; ++s) {
    const int n = 1 + s % 10;
    // mix in quadratics and transported MM functions so both verdicts occur
    BooleanFunction f;
    if (s % 3 == 0)
      f = random_function(n, rng);
    else if (s % 3 == 1 || n < 4 || n % 2)
      f = random_quadratic(n, rng);
    else
      f = transport(FieldCtx::make(n), mm_build(random_permutation(FieldCtx::make(n / 2), rng),
                                                random_values(FieldCtx::make(n / 2), rng))
                                           .f);
    const bool nb = is_negabent(f);
    negabent_seen += nb;
    if (all_zero_but_first(negaperiodic_acf(f)) != nb) fail(o, "negaperiodic ACF sample " + std::to_string(s));
  }
  if (o.ok) o.detail = "ACF sample had " + std::to_string(negabent_seen) + " negabent of 1000";
  return o;
}

// 9. Self-dual basis identities.
Outcome field_layer() {
  Outcome o;
  for (int n = 1; n <= 12; ++n) {
    const FieldCtx ctx = FieldCtx::make(n);
    const BitMatrix& b = ctx.self_dual_basis();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (ctx.trace(ctx.mul(b.row(i), b.row(j))) != (i == j)) fail(o, "Gram n=" + std::to_string(n));
    for (Element x = 0; x < ctx.size(); ++x) {
      const std::uint32_t cx = ctx.coords(x);
      for (Element y = 0; y < ctx.size(); ++y)
        if (ctx.trace(ctx.mul(x, y)) != ((std::popcount(cx & ctx.coords(y)) & 1) != 0)) {
          fail(o, "Tr(xy) n=" + std::to_string(n));
          break;
        }
    }
  }
  if (o.ok) o.detail = "n = 1..12 exhaustive";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;  // 0 = no limit
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "monomial four-way agreement", 120, four_way},
      {2, "root-count formula", 0, root_counts},
      {3, "bent monomial counts", 0, bent_counts},
      {4, "existence census", 0, census},
      {5, "transport theorem", 60, transport_theorem},
      {6, "MM criterion and homomorphic case", 0, mm_criterion},
      {7, "optimal-degree construction", 0, optimal_degree},
      {8, "consistency oracles", 0, consistency},
      {9, "field layer", 0, field_layer},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_s > 0 && secs > c.limit_s) fail(o, "over time limit " + std::to_string(c.limit_s) + " s");
    failed += !o.ok;
    std::printf("criterion %d %-36s %s  %.2fs  %s\n", c.id, c.name, o.ok ? "PASS" : "FAIL", secs, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
