#include "negabent/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "negabent/bridge.hpp"
#include "negabent/io.hpp"
#include "negabent/mm.hpp"
#include "negabent/monomials.hpp"
#include "negabent/sampling.hpp"
#include "negabent/spectra.hpp"

namespace negabent {

namespace {

/// Accumulates cases of one named check, keeping the first failure.
class Check {
 public:
  explicit Check(std::string name) { r_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& detail, const std::function<std::string()>& reproducer = {}) {
    ++r_.cases;
    if (ok || !r_.passed) {
      if (!ok) ++failures_;
      return;
    }
    ++failures_;
    r_.passed = false;
    r_.detail = detail();
    if (reproducer) r_.reproducer = reproducer();
  }

  CheckResult finish() {
    if (r_.passed)
      r_.detail = std::to_string(r_.cases) + " cases";
    else
      r_.detail += " (" + std::to_string(failures_) + " of " + std::to_string(r_.cases) + " cases failed)";
    return r_;
  }

 private:
  CheckResult r_;
  std::size_t failures_ = 0;
};

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << "0x" << std::hex << v;
  return os.str();
}

std::string table_of(const BooleanFunction& f, const FieldSpec& field) { return format_truth_table(f, field); }

FieldSpec plain_spec(int n) { return FieldCtx::make(n).spec(); }

// ---------------------------------------------------------------------------

SuiteReport field_core(const VerifyOptions& o) {
  Check gram("gram_identity"), dot("trace_equals_coordinate_dot"), round("coords_round_trip"),
      transit("relative_trace_transitivity"), frob("frobenius_is_squaring"), lin("trace_linear_surjective");
  Rng rng(o.seed);
  for (int n = 1; n <= o.n_max; ++n) {
    const FieldCtx ctx = FieldCtx::make(n);
    const auto& basis = ctx.self_dual_basis();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        gram.expect(ctx.trace(ctx.mul(basis.row(i), basis.row(j))) == (i == j),
                    [&] { return ctx.spec().to_string() + " Tr(a_" + std::to_string(i) + " a_" + std::to_string(j) + ")"; });

    auto pair_ok = [&](Element x, Element y) {
      return ctx.trace(ctx.mul(x, y)) == ((std::popcount(ctx.coords(x) & ctx.coords(y)) & 1) != 0);
    };
    if (n <= 12) {
      bool ok = true;
      Element bx = 0, by = 0;
      for (Element x = 0; x < ctx.size() && ok; ++x)
        for (Element y = 0; y < ctx.size(); ++y)
          if (!pair_ok(x, y)) {
            ok = false;
            bx = x;
            by = y;
            break;
          }
      dot.expect(ok, [&] { return ctx.spec().to_string() + " x=" + hex(bx) + " y=" + hex(by); });
    } else {
      std::uniform_int_distribution<Element> d(0, ctx.mask());
      bool ok = true;
      for (int s = 0; s < 100000 && ok; ++s) ok = pair_ok(d(rng), d(rng));
      dot.expect(ok, [&] { return ctx.spec().to_string() + " random pair"; });
    }

    bool rt = true, fr = true;
    std::size_t ones = 0;
    for (Element x = 0; x < ctx.size(); ++x) {
      rt = rt && ctx.coords(ctx.from_coords(x)) == x && ctx.from_coords(ctx.coords(x)) == x;
      fr = fr && ctx.mul(x, x) == ctx.pow(x, 2);
      ones += ctx.trace(x);
    }
    round.expect(rt, [&] { return ctx.spec().to_string(); });
    frob.expect(fr, [&] { return ctx.spec().to_string(); });
    lin.expect(ones == ctx.size() / 2, [&] { return ctx.spec().to_string() + " weight of Tr = " + std::to_string(ones); });

    if (n % 2 == 0) {
      bool ok = true;
      for (Element x = 0; x < ctx.size() && ok; ++x) ok = ctx.subfield_trace(n / 2, ctx.rel_trace(n / 2, x)) == ctx.trace(x);
      transit.expect(ok, [&] { return ctx.spec().to_string(); });
    }
  }
  return {"field-core", {gram.finish(), dot.finish(), round.finish(), transit.finish(), frob.finish(), lin.finish()}, 0};
}

SuiteReport monomial_grid(const VerifyOptions& o) {
  Check four("negabent_four_way"), roots("root_count_formula"), bent("bent_power_image"),
      bn("bent_negabent_conditions"), half("n_eq_2k_closed_form"), census("existence_census");
  for (int n = 4; n <= o.n_max; n += 2) {
    const FieldCtx ctx = FieldCtx::make(n);
    for (int k = 1; k < n; ++k) {
      const MonomialClass cls(ctx, k);
      const auto rows = cls.sweep(o.exec);
      auto repro = [&](Element l) {
        return "k=" + std::to_string(k) + " lambda=" + hex(l) + "\n" + table_of(gold_function(ctx, l, k), ctx.spec());
      };
      for (const auto& r : rows) {
        if (r.lambda == 0) continue;
        const bool agree = r.negabent == r.p_permutation && r.p_permutation == !r.zt_zero && !r.zt_zero == !r.in_root_set;
        four.expect(agree, [&] { return ctx.spec().to_string() + " k=" + std::to_string(k) + " lambda=" + hex(r.lambda); },
                    [&] { return repro(r.lambda); });
        bent.expect(r.bent == !r.in_power_image,
                    [&] { return ctx.spec().to_string() + " k=" + std::to_string(k) + " lambda=" + hex(r.lambda); },
                    [&] { return repro(r.lambda); });
        const bool cond2 = !r.in_power_image && !r.in_root_set;
        bn.expect(r.complete_mapping == cond2 && cond2 == (r.bent && r.negabent),
                  [&] { return ctx.spec().to_string() + " k=" + std::to_string(k) + " lambda=" + hex(r.lambda); },
                  [&] { return repro(r.lambda); });
        if (2 * k == n) {
          const Element s = r.lambda ^ ctx.frobenius(r.lambda, k);
          half.expect(r.negabent == (s != 1) && (r.bent && r.negabent) == (s > 1),
                      [&] { return ctx.spec().to_string() + " lambda=" + hex(r.lambda); }, [&] { return repro(r.lambda); });
        }
      }
      roots.expect(cls.root_set_size() == zt_root_count_formula(n, k), [&] {
        return ctx.spec().to_string() + " k=" + std::to_string(k) + " enumerated " + std::to_string(cls.root_set_size()) +
               " formula " + std::to_string(zt_root_count_formula(n, k));
      });
      const auto c = existence_census(ctx, k);
      if (c.gold_gcd > 1)
        census.expect(c.surplus >= 1 && c.bound_holds && c.bent_negabent_count >= 1, [&] {
          return ctx.spec().to_string() + " k=" + std::to_string(k) + " surplus=" + std::to_string(c.surplus) +
                 " intersection=" + std::to_string(c.intersection);
        });
    }
  }
  return {"monomial-grid", {four.finish(), roots.finish(), bent.finish(), bn.finish(), half.finish(), census.finish()}, 0};
}

SuiteReport mm_suite(const VerifyOptions& o) {
  Check crit("mm_criterion_matches_nega"), lemma("mm_bent_iff_bijective"), homo("homomorphic_iff_h_bent"),
      cm("complete_mapping_families");
  Rng rng(o.seed);
  auto check_pair = [&](const PermSpec& pi, const std::vector<Element>& h) {
    const MMFunction m = mm_build(pi, h);
    crit.expect(mm_negabent_test(m, o.exec) == is_negabent(m.f), [&] { return "t=" + std::to_string(m.t()); },
                [&] { return table_of(m.f, plain_spec(2 * m.t())); });
  };

  // t = 2: every permutation, every h table
  {
    const FieldCtx ctx = FieldCtx::make(2);
    PermSpec pi = PermSpec::identity(ctx);
    std::sort(pi.table.begin(), pi.table.end());
    do {
      for (std::uint32_t code = 0; code < 256; ++code) {
        std::vector<Element> h(4);
        for (int y = 0; y < 4; ++y) h[static_cast<size_t>(y)] = (code >> (2 * y)) & 3u;
        check_pair(pi, h);
      }
    } while (std::next_permutation(pi.table.begin(), pi.table.end()));
  }
  for (int t : {3, 4}) {
    const FieldCtx ctx = FieldCtx::make(t);
    for (int s = 0; s < o.samples; ++s) check_pair(random_permutation(ctx, rng), random_values(ctx, rng));
  }
  for (int t : {2, 3}) {
    const FieldCtx ctx = FieldCtx::make(t);
    for (int s = 0; s < o.samples; ++s) {
      const PermSpec pi = (s % 2 == 0) ? random_permutation(ctx, rng) : random_map(ctx, rng);
      const MMFunction m = mm_build(pi, random_values(ctx, rng));
      lemma.expect(is_bent(m.f) == pi.is_bijective(), [&] { return "t=" + std::to_string(t); },
                   [&] { return table_of(m.f, plain_spec(2 * t)); });
    }
  }

  auto check_homo = [&](const FieldCtx& ctx, int i, const std::vector<Element>& h) {
    const MMFunction m = homo_build(ctx, i, h);
    const BooleanFunction trh = from_trace_map(ctx, [&](Element y) { return h[y]; });
    homo.expect(is_negabent(m.f) == is_bent(trh), [&] { return "t=" + std::to_string(ctx.degree()) + " i=" + std::to_string(i); },
                [&] { return table_of(m.f, plain_spec(2 * ctx.degree())); });
  };
  {
    const FieldCtx ctx = FieldCtx::make(2);
    for (int i = 0; i < 2; ++i)
      for (std::uint32_t code = 0; code < 256; ++code) {
        std::vector<Element> h(4);
        for (int y = 0; y < 4; ++y) h[static_cast<size_t>(y)] = (code >> (2 * y)) & 3u;
        check_homo(ctx, i, h);
      }
  }
  for (int t : {3, 4}) {
    const FieldCtx ctx = FieldCtx::make(t);
    std::uniform_int_distribution<int> idx(0, t - 1);
    for (int s = 0; s < o.samples; ++s) check_homo(ctx, idx(rng), random_values(ctx, rng));
  }

  // complete mapping families and the search
  for (int t = 1; t <= 12; ++t) {
    const FieldCtx ctx = FieldCtx::make(t);
    for (int m = 1; m <= 3; m += 2) {
      const YannParams base = yann_params(m, 1);
      if (t % (base.k * m) != 0) continue;
      const YannParams p = yann_params(m, t / (base.k * m));
      for (Element a : yann_valid_coefficients(ctx, p))
        for (auto v : {YannVariant::pi1, YannVariant::pi2})
          cm.expect(is_complete_mapping(yann_mapping(ctx, p, a, v)), [&] {
            return "t=" + std::to_string(t) + " m=" + std::to_string(m) + " a=" + hex(a) + " variant " +
                   std::to_string(static_cast<int>(v));
          });
    }
  }
  for (int t = 2; t <= 6; ++t) {
    const FieldCtx ctx = FieldCtx::make(t);
    const auto found = search_complete_mappings(ctx, 4, o.seed);
    cm.expect(!found.empty(), [&] { return "search found nothing for t=" + std::to_string(t); });
    for (const auto& pi : found) cm.expect(is_complete_mapping(pi), [&] { return "search output t=" + std::to_string(t); });
  }
  return {"mm", {crit.finish(), lemma.finish(), homo.finish(), cm.finish()}, 0};
}

SuiteReport transport_suite(const VerifyOptions& o) {
  Check qprops("q_bent_not_negabent"), qder("q_derivative_identity"), b2n("bent_to_negabent"), n2b("negabent_to_bent"),
      cor("bent_negabent_iff_both_bent"), invol("transport_involution"), hyp("hyperplane_sum_vanishes");
  if (o.n < 2 || o.n % 2 != 0) throw std::invalid_argument("transport suite needs even n >= 2");
  const FieldCtx ctx = FieldCtx::make(o.n);
  const BooleanFunction q = q_function(ctx);
  Rng rng(o.seed);
  if (o.n >= 4)
    qprops.expect(is_bent(q) && !is_negabent(q) && degree(q) == 2, [&] { return ctx.spec().to_string(); },
                  [&] { return table_of(q, ctx.spec()); });
  for (Element a = 1; a < ctx.size(); ++a)
    qder.expect(q_derivative_check(ctx, a), [&] { return ctx.spec().to_string() + " a=" + hex(a); });

  auto check = [&](const BooleanFunction& f) {
    const BooleanFunction g = transport(ctx, f);
    const bool fb = is_bent(f), fn = is_negabent(f), gb = is_bent(g), gn = is_negabent(g);
    auto repro = [&] { return table_of(f, ctx.spec()); };
    auto where = [&] { return ctx.spec().to_string(); };
    if (fb) b2n.expect(gn, where, repro);
    if (fn) n2b.expect(gb, where, repro);
    cor.expect((fb && fn) == (fb && gb) && (fb && fn) == (gb && gn), where, repro);
    invol.expect(transport(ctx, g) == f, where, repro);
  };
  const int bits = quadratic_code_bits(o.n);
  if (o.exhaustive_quadratics || o.n <= 4) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) check(quadratic_from_code(o.n, code));
  } else {
    for (int s = 0; s < o.samples; ++s) check(random_quadratic(o.n, rng));
  }
  if (o.n >= 4) {
    const FieldCtx ctx_t = FieldCtx::make(o.n / 2);
    for (int s = 0; s < o.samples; ++s) {
      check(mm_build(random_permutation(ctx_t, rng), random_values(ctx_t, rng)).f);
      check(random_affine(o.n, rng));
    }
  }
  // Pascale-type vanishing on bent inputs
  std::uniform_int_distribution<Element> d(1, ctx.mask());
  for (int s = 0; s < o.samples && o.n >= 2; ++s) {
    const BooleanFunction f = o.n >= 4 ? mm_build(random_permutation(FieldCtx::make(o.n / 2), rng),
                                                  std::vector<Element>(std::size_t{1} << (o.n / 2), 0))
                                             .f
                                       : linear_function(2, 0) ^ quadratic_from_code(2, 1);
    const Element beta = d(rng), a = d(rng);
    if (!ctx.trace(ctx.mul(beta, a))) continue;
    hyp.expect(hyperplane_sum(ctx, f, beta, a) == 0, [&] { return "beta=" + hex(beta) + " a=" + hex(a); },
               [&] { return table_of(f, ctx.spec()); });
  }
  return {"transport",
          {qprops.finish(), qder.finish(), b2n.finish(), n2b.finish(), cor.finish(), invol.finish(), hyp.finish()},
          0};
}

SuiteReport construction_suite(const VerifyOptions& o) {
  Check eq("quad_equivalence_pointwise"), cons("construction_bent_negabent"), deg("construction_degree_n_over_2"),
      shift("construction_q_shift");
  Rng rng(o.seed);
  for (int n : {4, 6, 8}) {
    if (n > o.n_max) break;
    for (int s = 0; s < o.samples; ++s) {
      BooleanFunction f1, f2;
      do f1 = random_quadratic(n, rng);
      while (!quad_rank_oracle(f1).bent);
      do f2 = random_quadratic(n, rng);
      while (!quad_rank_oracle(f2).bent);
      const auto t = quad_equivalence(QuadraticForm::from_function(f1), QuadraticForm::from_function(f2));
      eq.expect(compose_affine(f1, t) == f2, [&] { return "n=" + std::to_string(n); },
                [&] { return table_of(f1, plain_spec(n)) + table_of(f2, plain_spec(n)); });
    }
  }
  for (int n : {4, 8, 12}) {
    if (n > o.n_max) break;
    const Construction c = optimal_degree_construction(n, CmSource::search, o.seed);
    auto repro = [&] { return c.pi_source + "\n" + table_of(c.F, plain_spec(n)); };
    cons.expect(c.bent && c.negabent, [&] { return "n=" + std::to_string(n); }, repro);
    deg.expect(c.degree == n / 2, [&] { return "n=" + std::to_string(n) + " degree " + std::to_string(c.degree); }, repro);
    shift.expect(c.q_shift_bent && c.q_shift_matches, [&] { return "n=" + std::to_string(n); }, repro);
  }
  return {"construction", {eq.finish(), cons.finish(), deg.finish(), shift.finish()}, 0};
}

}  // namespace

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"field-core", "monomial-grid", "mm", "transport", "construction"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& opts) {
  static const std::map<std::string, SuiteReport (*)(const VerifyOptions&)> suites = {
      {"field-core", field_core},     {"monomial-grid", monomial_grid},          {"mm", mm_suite},
      {"transport", transport_suite}, {"construction", construction_suite},
  };
  const auto it = suites.find(name);
  if (it == suites.end()) throw std::invalid_argument("unknown suite '" + name + "'");
  const auto start = std::chrono::steady_clock::now();
  SuiteReport r = it->second(opts);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace negabent
