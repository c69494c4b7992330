#include "negabent/bridge.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>

#include "negabent/spectra.hpp"

namespace negabent {

namespace {

void require_even(int n) {
  if (n % 2 != 0) throw std::invalid_argument("Q is defined for even n only, got n = " + std::to_string(n));
}

bool form(const BitMatrix& B, std::uint32_t u, std::uint32_t v) { return (std::popcount(u & B.apply(v)) & 1) != 0; }

/// Linear part and constant of an affine function; nullopt when deg f > 1.
std::optional<std::pair<std::uint32_t, bool>> affine_parts(const BooleanFunction& f) {
  const Anf a = anf(f);
  std::uint32_t lin = 0;
  for (std::uint32_t m = 1; m < a.coeffs.size(); ++m) {
    if (!a.coeffs[m]) continue;
    if (std::popcount(m) > 1) return std::nullopt;
    lin |= m;
  }
  return std::make_pair(lin, a.coeffs[0] != 0);
}

}  // namespace

BooleanFunction q_function(const FieldCtx& ctx) {
  const int n = ctx.degree();
  require_even(n);
  const int half = n / 2;
  BooleanFunction q(n);
  for (std::uint32_t i = 0; i < q.size(); ++i) {
    const Element x = ctx.from_coords(i);
    bool v = false;
    for (int j = 1; j <= half - 1; ++j) v ^= ctx.trace(ctx.mul(ctx.frobenius(x, j), x));
    v ^= ctx.subfield_trace(half, ctx.mul(ctx.frobenius(x, half), x));
    q.set(i, v);
  }
  return q;
}

bool q_derivative_check(const FieldCtx& ctx, Element a) {
  const BooleanFunction q = q_function(ctx);
  const std::uint32_t ai = ctx.coords(a);
  const bool tr_a = ctx.trace(a);
  const bool constant = q[ai] != q[0];
  for (std::uint32_t i = 0; i < q.size(); ++i) {
    const Element x = ctx.from_coords(i);
    const bool lhs = q[i] != q[i ^ ai];
    const bool rhs = ((tr_a && ctx.trace(x)) != ctx.trace(ctx.mul(a, x))) != constant;
    if (lhs != rhs) return false;
  }
  return true;
}

BooleanFunction transport(const FieldCtx& ctx, const BooleanFunction& f) {
  require_even(ctx.degree());
  if (f.num_vars() != ctx.degree())
    throw std::invalid_argument("function has " + std::to_string(f.num_vars()) + " variables, field degree is " +
                                std::to_string(ctx.degree()));
  return f ^ q_function(ctx);
}

std::int64_t hyperplane_sum(const FieldCtx& ctx, const BooleanFunction& f, Element beta, Element a) {
  if (f.num_vars() != ctx.degree()) throw std::invalid_argument("function/field size mismatch");
  const std::uint32_t ai = ctx.coords(a);
  std::int64_t acc = 0;
  for (std::uint32_t i = 0; i < f.size(); ++i) {
    const bool e = (f[i] != f[i ^ ai]) != ctx.trace(ctx.mul(beta, ctx.from_coords(i)));
    acc += e ? -1 : 1;
  }
  return acc;
}

// ---------------------------------------------------------------------------

QuadraticForm QuadraticForm::from_function(const BooleanFunction& f) {
  QuadraticForm q;
  q.n = f.num_vars();
  q.B = symplectic_matrix(f);
  const Anf a = anf(f);
  q.c = a.coeffs[0] != 0;
  for (int i = 0; i < q.n; ++i)
    if (a.coeffs[std::size_t{1} << i]) q.l |= 1u << i;
  return q;
}

BooleanFunction QuadraticForm::to_function() const {
  return BooleanFunction::tabulate(n, [&](std::uint32_t x) {
    bool v = c != ((std::popcount(l & x) & 1) != 0);
    for (int i = 0; i < n; ++i) {
      if (!((x >> i) & 1u)) continue;
      // pairs i < j
      const std::uint32_t upper = B.row(i) & x & ~((2u << i) - 1u);
      v ^= (std::popcount(upper) & 1) != 0;
    }
    return v;
  });
}

BitMatrix symplectic_basis(const BitMatrix& B) {
  const int n = B.rows();
  if (n != B.cols() || !B.is_symmetric()) throw std::invalid_argument("symplectic basis needs a symmetric matrix");
  for (int i = 0; i < n; ++i)
    if (B.get(i, i)) throw std::invalid_argument("symplectic basis needs a zero diagonal");
  std::vector<std::uint32_t> rest;
  for (int i = 0; i < n; ++i) rest.push_back(1u << i);
  std::vector<std::uint32_t> out;
  while (!rest.empty()) {
    const std::uint32_t e = rest.front();
    std::size_t j = 1;
    while (j < rest.size() && !form(B, e, rest[j])) ++j;
    if (j == rest.size()) throw std::invalid_argument("alternating form is degenerate");
    const std::uint32_t f = rest[j];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    rest.erase(rest.begin());
    for (auto& w : rest) {
      std::uint32_t adj = 0;
      if (form(B, w, f)) adj ^= e;
      if (form(B, w, e)) adj ^= f;
      w ^= adj;
    }
    out.push_back(e);
    out.push_back(f);
  }
  return BitMatrix::from_rows(std::move(out), n);
}

AffineTransform quad_equivalence(const QuadraticForm& q1, const QuadraticForm& q2) {
  if (q1.n != q2.n) throw std::invalid_argument("quadratic forms have different variable counts");
  if (!q1.is_bent() || !q2.is_bent()) throw std::invalid_argument("affine equivalence solver needs bent quadratics");
  const BitMatrix p1 = symplectic_basis(q1.B);
  const BitMatrix p2 = symplectic_basis(q2.B);
  const auto p2_inv = p2.inverse();
  if (!p2_inv) throw std::logic_error("symplectic basis is singular");
  // rows of P are basis vectors, P B P^T = J; A = (P2^-1 P1)^T gives A^T B1 A = B2
  const BitMatrix A = ((*p2_inv) * p1).transpose();
  if (!(A.transpose() * q1.B * A == q2.B)) throw std::logic_error("symplectic congruence failed");

  const BooleanFunction f1 = q1.to_function();
  const BooleanFunction f2 = q2.to_function();
  const BooleanFunction g = compose_affine(f1, {A, 0, 0, false});
  const auto diff = affine_parts(g ^ f2);
  if (!diff) throw std::logic_error("quadratic parts differ after congruence");
  const auto [r_lin, r_const] = *diff;

  const auto m_inv = (A.transpose() * q1.B).inverse();
  if (!m_inv) throw std::logic_error("A^T B1 is singular");
  AffineTransform t{A, m_inv->apply(r_lin), 0, false};
  t.c = r_const != (f1[t.b] != f1[0]);
  if (!(compose_affine(f1, t) == f2)) throw std::logic_error("affine equivalence verification failed");
  return t;
}

BooleanFunction inner_product_function(const FieldCtx& ctx_t) {
  return mm_build(PermSpec::identity(ctx_t), std::vector<Element>(ctx_t.size(), 0)).f;
}

std::optional<BlockRelation> find_block_relation(const FieldCtx& ctx_t, const BooleanFunction& q) {
  const int t = ctx_t.degree();
  if (q.num_vars() != 2 * t) throw std::invalid_argument("function must have 2t variables");
  const std::uint32_t low = ctx_t.mask();
  for (Element p = 1; p < ctx_t.size(); ++p) {
    const BooleanFunction gp = mm_build(PermSpec::scaled(ctx_t, p), std::vector<Element>(ctx_t.size(), 0)).f;
    const auto parts = affine_parts(q ^ gp);
    if (!parts) continue;
    BlockRelation r;
    r.alpha1 = 1;
    r.alpha3 = p;
    // Tr(beta x) = <coords(beta), coords(x)>
    r.beta = ctx_t.from_coords(parts->first & low);
    r.gamma = ctx_t.from_coords(parts->first >> t);
    r.c = parts->second;
    return r;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Construction construct_F(const PermSpec& pi, const std::vector<Element>& h_values,
                         const std::optional<AffineTransform>& T) {
  if (!is_complete_mapping(pi)) throw std::invalid_argument("pi is not a complete mapping");
  const FieldCtx& ctx_t = pi.ctx;
  const FieldCtx ctx_n = FieldCtx::make(2 * ctx_t.degree());
  const BooleanFunction q = q_function(ctx_n);
  const BooleanFunction g = inner_product_function(ctx_t);

  AffineTransform t;
  if (T) {
    if (!(compose_affine(g, *T) == q)) throw std::invalid_argument("supplied transform does not map G onto Q");
    t = *T;
  } else {
    t = quad_equivalence(QuadraticForm::from_function(g), QuadraticForm::from_function(q));
  }

  Construction c;
  c.mm_part = mm_build(pi, h_values).f;
  const BooleanFunction fg = mm_build(pi.plus_identity(), h_values).f;  // f + G
  c.F = compose_affine(fg, t);
  c.transform = t;
  c.bent = is_bent(c.F);
  c.negabent = is_negabent(c.F);
  c.degree = degree(c.F);
  const BooleanFunction shifted = c.F ^ q;
  c.q_shift_bent = is_bent(shifted);
  c.q_shift_matches = shifted == compose_affine(c.mm_part, t.input_part());
  return c;
}

Construction construct_F(const PermSpec& pi, const UnivariatePoly& h, const std::optional<AffineTransform>& T) {
  return construct_F(pi, h.table(pi.ctx), T);
}

CmSource parse_cm_source(const std::string& name) {
  if (name == "yann1") return CmSource::yann1;
  if (name == "yann2") return CmSource::yann2;
  if (name == "search") return CmSource::search;
  throw std::invalid_argument("unknown complete-mapping source '" + name + "' (yann1, yann2, search)");
}

std::string to_string(CmSource s) {
  switch (s) {
    case CmSource::yann1: return "yann1";
    case CmSource::yann2: return "yann2";
    case CmSource::search: return "search";
  }
  return "?";
}

PermSpec resolve_complete_mapping(const FieldCtx& ctx_t, CmSource source, std::uint64_t seed, std::string* description) {
  const int t = ctx_t.degree();
  std::ostringstream desc;
  if (source == CmSource::search) {
    auto found = search_complete_mappings(ctx_t, 8, seed);
    if (found.empty()) throw std::invalid_argument("no complete mapping of GF(2^" + std::to_string(t) + ") found");
    std::size_t pick = 0;
    while (pick < found.size() && found[pick].is_affine()) ++pick;
    if (pick == found.size()) pick = 0;
    desc << "search seed=" << seed << (found[pick].is_affine() ? " affine" : " nonlinear");
    if (description) *description = desc.str();
    return found[pick];
  }
  for (int m = 3; m <= t * 4 + 1; m += 2) {
    const YannParams base = yann_params(m, 1);
    if (t % (base.k * m) != 0) continue;
    const YannParams p = yann_params(m, t / (base.k * m));
    const auto valid = yann_valid_coefficients(ctx_t, p);
    if (valid.empty()) continue;
    const auto variant = source == CmSource::yann1 ? YannVariant::pi1 : YannVariant::pi2;
    desc << to_string(source) << " m=" << p.m << " l=" << p.ell << " k=" << p.k << " a=0x" << std::hex << valid.front();
    if (description) *description = desc.str();
    return yann_mapping(ctx_t, p, valid.front(), variant);
  }
  throw std::invalid_argument("no complete-mapping family parameters (odd m >= 3, k l m = " + std::to_string(t) +
                              ") admit a coefficient with a^m != 1");
}

Construction optimal_degree_construction(int n, CmSource source, std::uint64_t seed) {
  if (n < 4 || n % 2 != 0 || n > 2 * 12)
    throw std::invalid_argument("optimal-degree construction needs even n in [4, 24], got " + std::to_string(n));
  const int t = n / 2;
  const FieldCtx ctx_t = FieldCtx::make(t);
  std::string desc;
  const PermSpec pi = resolve_complete_mapping(ctx_t, source, seed, &desc);
  const UnivariatePoly h = UnivariatePoly::monomial(1, (std::uint64_t{1} << t) - 1, t);
  Construction c = construct_F(pi, h);
  c.pi_source = desc;
  return c;
}

}  // namespace negabent
