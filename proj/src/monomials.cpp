#include "negabent/monomials.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "negabent/spectra.hpp"

namespace negabent {

namespace {

void require_k(const FieldCtx& ctx, int k) {
  if (k < 1 || k >= ctx.degree())
    throw std::invalid_argument("Gold parameter k must be in [1, " + std::to_string(ctx.degree()) + "), got " +
                                std::to_string(k));
}

void require_lambda(Element lambda) {
  if (lambda == 0) throw std::invalid_argument("lambda must be nonzero");
}

void require_even(const FieldCtx& ctx) {
  if (ctx.degree() % 2 != 0)
    throw std::invalid_argument("bentness needs even n, got " + std::to_string(ctx.degree()));
}

std::vector<Element> collect(const std::vector<std::uint8_t>& flags) {
  std::vector<Element> out;
  for (Element v = 0; v < flags.size(); ++v)
    if (flags[v]) out.push_back(v);
  return out;
}

std::vector<std::uint8_t> power_image_flags(const FieldCtx& ctx, int k) {
  std::vector<std::uint8_t> flags(ctx.size(), 0);
  for (Element x = 0; x < ctx.size(); ++x) flags[ctx.mul(ctx.frobenius(x, k), x)] = 1;
  return flags;
}

std::vector<std::uint8_t> root_set_flags(const FieldCtx& ctx, int k) {
  const GoldParams p = gold_params(ctx.degree(), k);
  std::vector<std::uint8_t> flags(ctx.size(), 0);
  for (Element v0 = 0; v0 < ctx.size(); ++v0) {
    if (ctx.in_subfield(p.d, v0)) continue;
    const Element v1 = ctx.frobenius(v0, k);
    const Element s = v0 ^ v1;
    const Element num = ctx.mul(ctx.frobenius(v0, 2 * k), v0);
    const Element den = ctx.mul(ctx.frobenius(s, k), s);
    flags[ctx.div(num, den)] = 1;
  }
  return flags;
}

}  // namespace

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

// ---------------------------------------------------------------------------

void LinearizedPoly::add(Element c, int i) {
  const int n = ctx.degree();
  i %= n;
  if (i < 0) i += n;
  coeffs[static_cast<size_t>(i)] ^= c;
}

Element LinearizedPoly::evaluate(Element x) const {
  Element acc = 0;
  for (int i = 0; i < ctx.degree(); ++i) {
    const Element c = coeffs[static_cast<size_t>(i)];
    if (c) acc ^= ctx.mul(c, ctx.frobenius(x, i));
  }
  return acc;
}

BitMatrix LinearizedPoly::matrix() const {
  const int n = ctx.degree();
  std::vector<std::uint32_t> rows(static_cast<size_t>(n));
  for (int j = 0; j < n; ++j) rows[static_cast<size_t>(j)] = evaluate(Element{1} << j);
  return BitMatrix::from_rows(std::move(rows), n);
}

LinearizedPoly gold_linearized(const FieldCtx& ctx, Element lambda, int k) {
  require_k(ctx, k);
  const int n = ctx.degree();
  auto p = LinearizedPoly::zero(ctx);
  p.add(ctx.frobenius(lambda, n - k), n - k);
  p.add(lambda, k);
  return p;
}

LinearizedPoly negabent_linearized(const FieldCtx& ctx, Element lambda, int k) {
  auto p = gold_linearized(ctx, lambda, k);
  p.add(1, 0);
  return p;
}

bool linearized_is_permutation(const LinearizedPoly& poly) { return poly.matrix().rank() == poly.ctx.degree(); }

BooleanFunction gold_function(const FieldCtx& ctx, Element lambda, int k) {
  require_lambda(lambda);
  require_k(ctx, k);
  BooleanFunction f(ctx.degree());
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const Element x = ctx.from_coords(i);
    f.set(i, ctx.trace(ctx.mul(lambda, ctx.mul(ctx.frobenius(x, k), x))));
  }
  return f;
}

bool is_negabent_monomial(const FieldCtx& ctx, Element lambda, int k) {
  require_lambda(lambda);
  return linearized_is_permutation(negabent_linearized(ctx, lambda, k));
}

GoldParams gold_params(int n, int k) {
  if (n < 1 || k < 1) throw std::invalid_argument("Gold parameters need n >= 1 and k >= 1");
  const int d = std::gcd(k, n);
  return {k, d, n / d};
}

Element zt_eval(const FieldCtx& ctx, Element lambda, int k) {
  const GoldParams p = gold_params(ctx.degree(), k);
  if (p.t == 1) throw std::invalid_argument("Z_t needs t = n / gcd(k, n) > 1");
  // c[i] holds C_i, 1-based
  std::vector<Element> c(static_cast<size_t>(p.t) + 2, 0);
  c[1] = c[2] = 1;
  for (int i = 1; i <= p.t - 1; ++i) {
    const auto u = static_cast<size_t>(i);
    c[u + 2] = c[u + 1] ^ ctx.mul(ctx.frobenius(lambda, (i * k) % ctx.degree()), c[u]);
  }
  return c[static_cast<size_t>(p.t) + 1] ^ ctx.mul(lambda, ctx.frobenius(c[static_cast<size_t>(p.t) - 1], k));
}

std::vector<Element> zt_root_set(const FieldCtx& ctx, int k) { return collect(root_set_flags(ctx, k)); }

std::uint64_t zt_root_count_formula(int n, int k) {
  const GoldParams p = gold_params(n, k);
  const std::uint64_t two_d = std::uint64_t{1} << p.d;
  const std::uint64_t two_nd = std::uint64_t{1} << (n + p.d);
  const std::uint64_t den = two_d * two_d - 1;
  return p.t % 2 == 0 ? (two_nd - two_d) / den : (two_nd - two_d * two_d) / den;
}

std::vector<Element> gold_power_image(const FieldCtx& ctx, int k) { return collect(power_image_flags(ctx, k)); }

bool is_bent_monomial(const FieldCtx& ctx, Element lambda, int k) {
  require_even(ctx);
  require_lambda(lambda);
  require_k(ctx, k);
  for (Element x = 0; x < ctx.size(); ++x)
    if (ctx.mul(ctx.frobenius(x, k), x) == lambda) return false;
  return true;
}

bool is_bent_negabent_monomial(const FieldCtx& ctx, Element lambda, int k) {
  if (!is_bent_monomial(ctx, lambda, k)) return false;
  const auto roots = zt_root_set(ctx, k);
  return !std::binary_search(roots.begin(), roots.end(), lambda);
}

bool complete_mapping_check(const FieldCtx& ctx, Element lambda, int k) {
  require_even(ctx);
  require_lambda(lambda);
  return linearized_is_permutation(gold_linearized(ctx, lambda, k)) &&
         linearized_is_permutation(negabent_linearized(ctx, lambda, k));
}

// ---------------------------------------------------------------------------

MonomialClass::MonomialClass(FieldCtx ctx, int k) : ctx_(std::move(ctx)) {
  require_k(ctx_, k);
  params_ = gold_params(ctx_.degree(), k);
  power_image_ = power_image_flags(ctx_, k);
  root_set_ = root_set_flags(ctx_, k);
}

std::size_t MonomialClass::power_image_size() const {
  return static_cast<std::size_t>(std::count(power_image_.begin(), power_image_.end(), 1));
}

std::size_t MonomialClass::root_set_size() const {
  return static_cast<std::size_t>(std::count(root_set_.begin(), root_set_.end(), 1));
}

MonomialRow MonomialClass::row(Element lambda, bool with_spectra) const {
  const int k = params_.k;
  MonomialRow r;
  r.lambda = lambda;
  r.in_power_image = in_power_image(lambda);
  r.in_root_set = in_root_set(lambda);
  r.p_permutation = linearized_is_permutation(negabent_linearized(ctx_, lambda, k));
  r.zt_zero = zt_eval(ctx_, lambda, k) == 0;
  r.complete_mapping = r.p_permutation && linearized_is_permutation(gold_linearized(ctx_, lambda, k));
  if (with_spectra) {
    const BooleanFunction f = lambda == 0 ? BooleanFunction(ctx_.degree()) : gold_function(ctx_, lambda, k);
    r.bent = is_bent(f);
    r.negabent = is_negabent(f);
  }
  return r;
}

std::vector<MonomialRow> MonomialClass::sweep(Exec exec, bool with_spectra) const {
  std::vector<MonomialRow> rows(ctx_.size());
  for_range(
      0, ctx_.size(), [&](std::int64_t i) { rows[static_cast<size_t>(i)] = row(static_cast<Element>(i), with_spectra); },
      exec);
  return rows;
}

ExistenceCensus existence_census(const FieldCtx& ctx, int k) {
  require_k(ctx, k);
  const MonomialClass cls(ctx, k);
  ExistenceCensus c;
  c.n = ctx.degree();
  c.k = k;
  c.gold_gcd = gcd_u64((std::uint64_t{1} << k) + 1, (std::uint64_t{1} << c.n) - 1);
  for (Element v = 0; v < ctx.size(); ++v) {
    const bool a = cls.in_power_image(v);
    const bool b = cls.in_root_set(v);
    c.s1 += a;
    c.s1_nonzero += a && v != 0;
    c.s2 += b;
    c.intersection += a && b;
    c.union_size += a || b;
    c.union_nonzero_s1 += (a && v != 0) || b;
    c.bent_negabent_count += v != 0 && !a && !b;
  }
  c.surplus = ctx.size() - c.union_nonzero_s1;
  c.bound_holds = c.surplus >= c.intersection + 1;
  return c;
}

}  // namespace negabent
