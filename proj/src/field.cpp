#include "negabent/field.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace negabent {

namespace {

constexpr int kLogTableMaxDegree = 20;

constexpr std::array<std::uint64_t, kMaxFieldDegree + 1> kDefaultModuli = {
    0x0,       0x3,       0x7,       0xB,       0x13,      0x25,      0x43,
    0x83,      0x11D,     0x211,     0x409,     0x805,     0x1053,    0x201B,
    0x4443,    0x8003,    0x1100B,   0x20009,   0x40081,   0x80027,   0x100009,
    0x200005,  0x400003,  0x800021,  0x1000087,
};

int poly_degree(std::uint64_t p) { return p == 0 ? -1 : 63 - std::countl_zero(p); }

std::uint64_t poly_mod(std::uint64_t a, std::uint64_t m) {
  const int dm = poly_degree(m);
  for (int d = poly_degree(a); d >= dm; d = poly_degree(a)) a ^= m << (d - dm);
  return a;
}

std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  while (b) {
    if (b & 1u) r ^= a;
    a <<= 1;
    b >>= 1;
  }
  return r;
}

std::uint64_t poly_mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return poly_mod(clmul(a, b), m);
}

std::uint64_t poly_gcd(std::uint64_t a, std::uint64_t b) {
  while (b) {
    a = poly_mod(a, b);
    std::swap(a, b);
  }
  return a;
}

/// x^(2^j) mod m
std::uint64_t x_pow_2j(int j, std::uint64_t m) {
  std::uint64_t r = poly_mod(0b10, m);
  for (int i = 0; i < j; ++i) r = poly_mulmod(r, r, m);
  return r;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p = 2; p * p <= v; ++p) {
    if (v % p == 0) {
      ps.push_back(p);
      while (v % p == 0) v /= p;
    }
  }
  if (v > 1) ps.push_back(v);
  return ps;
}

}  // namespace

struct FieldCtx::Tables {
  std::vector<Element> exp;  // length 2(q-1)
  std::vector<std::uint32_t> log;
};

// ---------------------------------------------------------------------------

std::string FieldSpec::to_string() const {
  std::ostringstream os;
  os << "gf2_" << n << ':' << std::hex << modulus;
  return os.str();
}

FieldSpec FieldSpec::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed field spec '" + std::string(text) + "'"); };
  if (text.substr(0, 4) != "gf2_") throw fail();
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw fail();
  FieldSpec spec;
  auto deg = text.substr(4, colon - 4);
  auto hex = text.substr(colon + 1);
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  auto r1 = std::from_chars(deg.data(), deg.data() + deg.size(), spec.n);
  auto r2 = std::from_chars(hex.data(), hex.data() + hex.size(), spec.modulus, 16);
  if (r1.ec != std::errc{} || r1.ptr != deg.data() + deg.size() || deg.empty()) throw fail();
  if (r2.ec != std::errc{} || r2.ptr != hex.data() + hex.size() || hex.empty()) throw fail();
  return spec;
}

std::uint64_t default_modulus(int n) {
  if (n < 1 || n > kMaxFieldDegree)
    throw std::invalid_argument("field degree must be in [1, 24], got " + std::to_string(n));
  return kDefaultModuli[static_cast<size_t>(n)];
}

bool is_irreducible(std::uint64_t modulus, int n) {
  if (n < 1 || poly_degree(modulus) != n) return false;
  if (x_pow_2j(n, modulus) != poly_mod(0b10, modulus)) return false;
  for (auto p : prime_factors(static_cast<std::uint64_t>(n))) {
    const std::uint64_t h = x_pow_2j(n / static_cast<int>(p), modulus) ^ poly_mod(0b10, modulus);
    if (poly_gcd(modulus, h) != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

FieldCtx FieldCtx::make(int n, std::optional<std::uint64_t> modulus) {
  if (n < 1 || n > kMaxFieldDegree)
    throw std::invalid_argument("field degree must be in [1, 24], got " + std::to_string(n));
  const std::uint64_t m = modulus.value_or(default_modulus(n));
  if (poly_degree(m) != n)
    throw std::invalid_argument("modulus " + FieldSpec{n, m}.to_string() + " does not have degree " +
                                std::to_string(n));
  if (!is_irreducible(m, n))
    throw std::invalid_argument("modulus " + FieldSpec{n, m}.to_string() + " is reducible");

  FieldCtx ctx;
  ctx.n_ = n;
  ctx.modulus_ = m;

  // primitive element: smallest g with g^((q-1)/p) != 1 for each prime p | q-1
  const std::uint64_t order = (std::uint64_t{1} << n) - 1;
  const auto factors = prime_factors(order);
  for (Element g = (n == 1 ? 1 : 2); g < ctx.size(); ++g) {
    bool primitive = true;
    for (auto p : factors) {
      if (ctx.pow(g, order / p) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      ctx.generator_ = g;
      break;
    }
  }

  if (n <= kLogTableMaxDegree) {
    auto t = std::make_shared<Tables>();
    const auto q1 = static_cast<size_t>(order);
    t->exp.resize(2 * q1);
    t->log.assign(ctx.size(), 0);
    Element v = 1;
    for (size_t i = 0; i < q1; ++i) {
      t->exp[i] = t->exp[i + q1] = v;
      t->log[v] = static_cast<std::uint32_t>(i);
      v = ctx.clmul_reduce(v, ctx.generator_);
    }
    ctx.tables_ = std::move(t);
  }

  for (int i = 0; i < n; ++i) {
    const Element b = Element{1} << i;
    Element acc = 0, y = b;
    for (int j = 0; j < n; ++j) {
      acc ^= y;
      y = ctx.mul(y, y);
    }
    if (acc != 0 && acc != 1) throw std::logic_error("trace of basis element outside GF(2)");
    if (acc) ctx.trace_mask_ |= b;
  }

  ctx.build_self_dual_basis();
  ctx.build_coordinate_tables();
  return ctx;
}

bool FieldCtx::has_log_tables() const { return static_cast<bool>(tables_); }

Element FieldCtx::clmul_reduce(Element a, Element b) const {
  return static_cast<Element>(poly_mulmod(a, b, modulus_));
}

Element FieldCtx::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  if (tables_) return tables_->exp[tables_->log[a] + tables_->log[b]];
  return clmul_reduce(a, b);
}

Element FieldCtx::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = (std::uint64_t{1} << n_) - 1;
  e %= order;
  if (tables_) return tables_->exp[static_cast<size_t>((tables_->log[a] * e) % order)];
  Element r = 1, base = a;
  while (e) {
    if (e & 1u) r = clmul_reduce(r, base);
    base = clmul_reduce(base, base);
    e >>= 1;
  }
  return r;
}

Element FieldCtx::inverse(Element a) const {
  if (a == 0) throw std::domain_error("inverse of zero in " + spec().to_string());
  const std::uint64_t order = (std::uint64_t{1} << n_) - 1;
  if (tables_) return tables_->exp[(order - tables_->log[a]) % order];
  return pow(a, order - 1);
}

Element FieldCtx::frobenius(Element a, int j) const {
  j %= n_;
  if (j < 0) j += n_;
  if (a == 0 || j == 0) return a;
  if (tables_) {
    const std::uint64_t order = (std::uint64_t{1} << n_) - 1;
    return tables_->exp[static_cast<size_t>((std::uint64_t{tables_->log[a]} << j) % order)];
  }
  for (int i = 0; i < j; ++i) a = clmul_reduce(a, a);
  return a;
}

Element FieldCtx::rel_trace(int m, Element a) const {
  if (m < 1 || n_ % m != 0)
    throw std::invalid_argument(std::to_string(m) + " does not divide " + std::to_string(n_));
  Element acc = 0;
  for (int i = 0; i < n_ / m; ++i) acc ^= frobenius(a, m * i);
  return acc;
}

bool FieldCtx::subfield_trace(int m, Element a) const {
  if (m < 1 || n_ % m != 0)
    throw std::invalid_argument(std::to_string(m) + " does not divide " + std::to_string(n_));
  if (!in_subfield(m, a)) throw std::invalid_argument("element is outside GF(2^" + std::to_string(m) + ")");
  Element acc = 0;
  for (int i = 0; i < m; ++i) acc ^= frobenius(a, i);
  return acc != 0;
}

void FieldCtx::build_self_dual_basis() {
  // Congruence-reduce the trace form Tr(uv) to the identity: repeatedly split
  // off a vector with Tr(v^2) = 1 and project the remainder onto its orthogonal
  // complement. When the remainder becomes alternating, a hyperbolic pair
  // (w1, w2) is merged with an already chosen u into {u+w1+w2, u+w1, u+w2}.
  auto form = [this](Element u, Element v) { return trace(mul(u, v)); };
  std::vector<Element> rest;
  for (int i = 0; i < n_; ++i) rest.push_back(Element{1} << i);
  std::vector<Element> chosen;

  while (!rest.empty()) {
    size_t pick = rest.size();
    for (size_t i = 0; i < rest.size(); ++i)
      if (form(rest[i], rest[i])) {
        pick = i;
        break;
      }
    if (pick < rest.size()) {
      const Element v = rest[pick];
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(pick));
      for (auto& w : rest)
        if (form(w, v)) w ^= v;
      chosen.push_back(v);
      continue;
    }
    if (chosen.empty() || rest.size() < 2)
      throw std::logic_error("self-dual basis construction stalled for " + spec().to_string());
    const Element w1 = rest[0];
    size_t j = 1;
    while (j < rest.size() && !form(w1, rest[j])) ++j;
    if (j == rest.size()) throw std::logic_error("trace form degenerate for " + spec().to_string());
    const Element w2 = rest[j];
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
    rest.erase(rest.begin());
    for (auto& w : rest) {
      Element adj = 0;
      if (form(w, w2)) adj ^= w1;
      if (form(w, w1)) adj ^= w2;
      w ^= adj;
    }
    const Element u = chosen.back();
    chosen.back() = u ^ w1 ^ w2;
    chosen.push_back(u ^ w1);
    chosen.push_back(u ^ w2);
  }

  std::vector<std::uint32_t> rows(chosen.begin(), chosen.end());
  sd_basis_ = BitMatrix::from_rows(std::move(rows), n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (form(sd_basis_.row(i), sd_basis_.row(j)) != (i == j))
        throw std::logic_error("self-dual basis fails the Gram condition for " + spec().to_string());
  auto inv = sd_basis_.inverse();
  if (!inv) throw std::logic_error("self-dual basis is singular for " + spec().to_string());
  sd_basis_inv_ = std::move(*inv);
}

void FieldCtx::build_coordinate_tables() {
  auto to = std::make_shared<std::array<std::array<std::uint32_t, 256>, 3>>();
  auto from = std::make_shared<std::array<std::array<std::uint32_t, 256>, 3>>();
  for (int chunk = 0; chunk < 3; ++chunk) {
    for (std::uint32_t byte = 0; byte < 256; ++byte) {
      const std::uint32_t v = (byte << (8 * chunk)) & mask();
      (*to)[static_cast<size_t>(chunk)][byte] = sd_basis_inv_.apply_left(v);
      (*from)[static_cast<size_t>(chunk)][byte] = sd_basis_.apply_left(v);
    }
  }
  to_sd_ = std::move(to);
  from_sd_ = std::move(from);
}

std::uint32_t FieldCtx::coords(Element a) const {
  const auto& t = *to_sd_;
  return t[0][a & 0xFFu] ^ t[1][(a >> 8) & 0xFFu] ^ t[2][(a >> 16) & 0xFFu];
}

Element FieldCtx::from_coords(std::uint32_t bits) const {
  const auto& t = *from_sd_;
  return t[0][bits & 0xFFu] ^ t[1][(bits >> 8) & 0xFFu] ^ t[2][(bits >> 16) & 0xFFu];
}

}  // namespace negabent
