#include "negabent/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace negabent {

namespace {

void require_vars(int n) {
  if (n < 0 || n > kMaxFieldDegree)
    throw std::invalid_argument("variable count must be in [0, 24], got " + std::to_string(n));
}

void require_same(const BooleanFunction& f, const BooleanFunction& g) {
  if (f.num_vars() != g.num_vars())
    throw std::invalid_argument("variable count mismatch: " + std::to_string(f.num_vars()) + " vs " +
                                std::to_string(g.num_vars()));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

BooleanFunction::BooleanFunction(int n) : n_(n) {
  require_vars(n);
  tt_.assign(std::size_t{1} << n, 0);
}

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> bits) : n_(n), tt_(std::move(bits)) {
  require_vars(n);
  if (tt_.size() != (std::size_t{1} << n))
    throw std::invalid_argument("truth table length " + std::to_string(tt_.size()) + " is not 2^" +
                                std::to_string(n));
  for (auto& b : tt_) b = b ? 1 : 0;
}

std::uint32_t BooleanFunction::weight() const {
  return static_cast<std::uint32_t>(std::count(tt_.begin(), tt_.end(), std::uint8_t{1}));
}

bool BooleanFunction::is_constant() const {
  return std::all_of(tt_.begin(), tt_.end(), [&](std::uint8_t b) { return b == tt_.front(); });
}

void moebius_inplace(std::span<std::uint8_t> values) {
  const std::size_t size = values.size();
  for (std::size_t h = 1; h < size; h <<= 1)
    for (std::size_t i = 0; i < size; i += 2 * h)
      for (std::size_t j = i; j < i + h; ++j) values[j + h] ^= values[j];
}

Anf anf(const BooleanFunction& f) {
  Anf a{f.num_vars(), std::vector<std::uint8_t>(f.bits().begin(), f.bits().end())};
  moebius_inplace(a.coeffs);
  return a;
}

BooleanFunction from_anf(const Anf& a) {
  std::vector<std::uint8_t> bits = a.coeffs;
  moebius_inplace(bits);
  return BooleanFunction(a.n, std::move(bits));
}

int degree(const Anf& a) {
  int d = kZeroFunctionDegree;
  for (std::uint32_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i]) d = std::max(d, std::popcount(i));
  return d;
}

int degree(const BooleanFunction& f) { return degree(anf(f)); }

BooleanFunction operator^(const BooleanFunction& f, const BooleanFunction& g) {
  require_same(f, g);
  BooleanFunction r(f.num_vars());
  for (std::uint32_t i = 0; i < f.size(); ++i) r.set(i, f[i] != g[i]);
  return r;
}

BooleanFunction derivative(const BooleanFunction& f, std::uint32_t a) {
  if (a >= f.size()) throw std::invalid_argument("derivative direction out of range");
  BooleanFunction r(f.num_vars());
  for (std::uint32_t i = 0; i < f.size(); ++i) r.set(i, f[i] != f[i ^ a]);
  return r;
}

std::vector<std::uint32_t> linear_structures(const BooleanFunction& f) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t a = 1; a < f.size(); ++a) {
    const bool first = f[0] != f[a];
    bool constant = true;
    for (std::uint32_t i = 1; i < f.size() && constant; ++i) constant = (f[i] != f[i ^ a]) == first;
    if (constant) out.push_back(a);
  }
  return out;
}

BooleanFunction linear_function(int n, std::uint32_t mask, bool c) {
  return BooleanFunction::tabulate(n, [&](std::uint32_t x) { return ((std::popcount(mask & x) & 1) != 0) != c; });
}

// ---------------------------------------------------------------------------

std::uint64_t normalize_exponent(std::uint64_t e, int n) {
  const std::uint64_t q = std::uint64_t{1} << n;
  if (e < q) return e;
  return (e - 1) % (q - 1) + 1;
}

UnivariatePoly UnivariatePoly::monomial(Element coef, std::uint64_t exp, int n) {
  UnivariatePoly p;
  p.add_term(coef, exp, n);
  return p;
}

void UnivariatePoly::add_term(Element coef, std::uint64_t exp, int n) {
  exp = normalize_exponent(exp, n);
  auto it = std::find_if(terms_.begin(), terms_.end(), [&](const Term& t) { return t.exp == exp; });
  if (it != terms_.end()) {
    it->coef ^= coef;
    if (it->coef == 0) terms_.erase(it);
  } else if (coef != 0) {
    terms_.push_back({coef, exp});
  }
}

UnivariatePoly UnivariatePoly::parse(std::string_view text, const FieldCtx& ctx) {
  UnivariatePoly p;
  auto fail = [&](std::string_view why) {
    return std::invalid_argument("malformed polynomial '" + std::string(text) + "': " + std::string(why));
  };
  std::string_view rest = trim(text);
  if (rest.empty() || rest == "0") return p;
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    std::string_view term = trim(rest.substr(0, comma));
    rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    if (term.empty()) throw fail("empty term");

    Element coef = 1;
    std::uint64_t exp = 0;
    const auto star = term.find('*');
    std::string_view mono = term;
    if (star != std::string_view::npos) {
      auto c = trim(term.substr(0, star));
      if (c.starts_with("0x") || c.starts_with("0X")) c.remove_prefix(2);
      auto r = std::from_chars(c.data(), c.data() + c.size(), coef, 16);
      if (r.ec != std::errc{} || r.ptr != c.data() + c.size() || c.empty()) throw fail("bad coefficient");
      mono = trim(term.substr(star + 1));
    } else if (!term.starts_with('x')) {
      // bare constant term
      auto c = term;
      if (c.starts_with("0x") || c.starts_with("0X")) c.remove_prefix(2);
      auto r = std::from_chars(c.data(), c.data() + c.size(), coef, 16);
      if (r.ec != std::errc{} || r.ptr != c.data() + c.size()) throw fail("bad constant");
      mono = {};
    }
    if (!mono.empty()) {
      if (mono == "x") {
        exp = 1;
      } else if (mono.starts_with("x^")) {
        auto e = mono.substr(2);
        auto r = std::from_chars(e.data(), e.data() + e.size(), exp);
        if (r.ec != std::errc{} || r.ptr != e.data() + e.size() || e.empty()) throw fail("bad exponent");
      } else {
        throw fail("expected x^<exp>");
      }
    }
    if (!ctx.contains(coef)) throw fail("coefficient outside the field");
    p.add_term(coef, exp, ctx.degree());
  }
  return p;
}

Element UnivariatePoly::evaluate(const FieldCtx& ctx, Element x) const {
  Element acc = 0;
  for (const auto& t : terms_) acc ^= ctx.mul(t.coef, ctx.pow(x, t.exp));
  return acc;
}

std::vector<Element> UnivariatePoly::table(const FieldCtx& ctx) const {
  std::vector<Element> out(ctx.size());
  for (Element x = 0; x < ctx.size(); ++x) out[x] = evaluate(ctx, x);
  return out;
}

int UnivariatePoly::algebraic_degree() const {
  int d = kZeroFunctionDegree;
  for (const auto& t : terms_) d = std::max(d, std::popcount(t.exp));
  return d;
}

std::string UnivariatePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << ',';
    os << std::hex << terms_[i].coef << std::dec << "*x^" << terms_[i].exp;
  }
  return os.str();
}

BooleanFunction from_trace_poly(const FieldCtx& ctx, const UnivariatePoly& poly) {
  BooleanFunction f(ctx.degree());
  const auto size = static_cast<std::int64_t>(f.size());
#pragma omp parallel for schedule(static) if (size >= (1 << 14))
  for (std::int64_t i = 0; i < size; ++i) {
    const auto idx = static_cast<std::uint32_t>(i);
    f.set(idx, ctx.trace(poly.evaluate(ctx, ctx.from_coords(idx))));
  }
  return f;
}

BooleanFunction from_trace_map(const FieldCtx& ctx, const std::function<Element(Element)>& value) {
  BooleanFunction f(ctx.degree());
  for (std::uint32_t i = 0; i < f.size(); ++i) f.set(i, ctx.trace(value(ctx.from_coords(i))));
  return f;
}

// ---------------------------------------------------------------------------

AffineTransform AffineTransform::identity(int n) { return {BitMatrix::identity(n), 0, 0, false}; }

BooleanFunction compose_affine(const BooleanFunction& f, const AffineTransform& t) {
  const int n = f.num_vars();
  if (t.A.rows() != n || t.A.cols() != n)
    throw std::invalid_argument("affine transform dimension does not match the function");
  if (t.A.rank() != n) throw std::invalid_argument("affine transform matrix is singular");
  BooleanFunction r(n);
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    const bool lin = (std::popcount(t.l & x) & 1) != 0;
    r.set(x, (f[t.A.apply(x) ^ t.b] != lin) != t.c);
  }
  return r;
}

}  // namespace negabent
