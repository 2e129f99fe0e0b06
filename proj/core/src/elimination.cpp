#include "focal/elimination.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "focal/errors.hpp"

namespace focal {
namespace {

// Dense univariate polynomial in x, lowest degree first, no trailing zeros.
using UPoly = std::vector<FieldElement>;
// Polynomial in y with coefficients in F_p[x], lowest degree first.
using BPoly = std::vector<UPoly>;

class Univariate {
 public:
  explicit Univariate(const PrimeField& f) : f_(f) {}

  static void trim(UPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  static int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

  UPoly constant(FieldElement c) const { return c.is_zero() ? UPoly{} : UPoly{c}; }

  UPoly add(const UPoly& a, const UPoly& b) const {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = f_.add(i < a.size() ? a[i] : f_.zero(), i < b.size() ? b[i] : f_.zero());
    }
    trim(r);
    return r;
  }
  UPoly sub(const UPoly& a, const UPoly& b) const {
    UPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = f_.sub(i < a.size() ? a[i] : f_.zero(), i < b.size() ? b[i] : f_.zero());
    }
    trim(r);
    return r;
  }
  UPoly mul(const UPoly& a, const UPoly& b) const {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = f_.add(r[i + j], f_.mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  UPoly scale(const UPoly& a, FieldElement c) const {
    UPoly r;
    if (c.is_zero()) return r;
    for (FieldElement v : a) r.push_back(f_.mul(v, c));
    return r;
  }

  // Quotient and remainder; b nonzero.
  std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) const {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    const FieldElement inv = f_.inv(b.back());
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (a.size() >= b.size() && !a.empty()) {
      const std::size_t shift = a.size() - b.size();
      const FieldElement c = f_.mul(a.back(), inv);
      q[shift] = c;
      for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f_.sub(a[shift + i], f_.mul(c, b[i]));
      trim(a);
    }
    trim(q);
    return {q, a};
  }
  UPoly mod(const UPoly& a, const UPoly& b) const { return divmod(a, b).second; }
  UPoly quo(const UPoly& a, const UPoly& b) const { return divmod(a, b).first; }

  UPoly monic(const UPoly& a) const { return a.empty() ? a : scale(a, f_.inv(a.back())); }

  UPoly gcd(UPoly a, UPoly b) const {
    while (!b.empty()) {
      UPoly r = mod(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  // Inverse of a modulo m, assuming gcd(a, m) = 1.
  UPoly inverse_mod(const UPoly& a, const UPoly& m) const {
    UPoly r0 = m, r1 = mod(a, m);
    UPoly t0, t1 = constant(f_.one());
    while (!r1.empty()) {
      auto [q, r] = divmod(r0, r1);
      UPoly t = sub(t0, mul(q, t1));
      r0 = std::move(r1);
      r1 = std::move(r);
      t0 = std::move(t1);
      t1 = std::move(t);
    }
    if (deg(r0) != 0) throw std::logic_error("element is not a unit");
    return mod(scale(t0, f_.inv(r0[0])), m);
  }

  UPoly derivative(const UPoly& a) const {
    UPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(f_.mul(a[i], f_.from_uint(i)));
    trim(r);
    return r;
  }

  // Monic squarefree polynomial with the same roots as a (a nonconstant).
  UPoly radical(const UPoly& a) const {
    const UPoly d = derivative(a);
    if (d.empty()) {
      // a(x) = b(x^p) = b(x)^p, since Frobenius fixes F_p.
      UPoly b;
      for (std::size_t i = 0; i < a.size(); i += f_.modulus()) b.push_back(a[i]);
      return radical(b);
    }
    UPoly u = gcd(a, d);
    const UPoly w = monic(quo(a, u));
    // Strip factors of w from u; what is left has multiplicities divisible by p.
    for (UPoly g = gcd(u, w); deg(g) > 0; g = gcd(u, w)) u = quo(u, g);
    return deg(u) > 0 ? mul(w, radical(u)) : w;
  }

  const PrimeField& field() const { return f_; }

 private:
  const PrimeField& f_;
};

void trim(BPoly& a) {
  while (!a.empty() && a.back().empty()) a.pop_back();
}
int deg_y(const BPoly& a) { return static_cast<int>(a.size()) - 1; }

BPoly to_bpoly(const Polynomial& p) {
  BPoly out;
  for (const auto& [m, c] : p.terms()) {
    if (m[Var::Z] != 0) throw std::invalid_argument("expected a polynomial in x, y");
    const auto y = static_cast<std::size_t>(m[Var::Y]);
    const auto x = static_cast<std::size_t>(m[Var::X]);
    if (out.size() <= y) out.resize(y + 1);
    if (out[y].size() <= x) out[y].resize(x + 1);
    out[y][x] = c;
  }
  for (auto& c : out) Univariate::trim(c);
  trim(out);
  return out;
}

Polynomial from_bpoly(const PrimeField& field, const BPoly& b) {
  Polynomial p(field);
  for (std::size_t y = 0; y < b.size(); ++y) {
    for (std::size_t x = 0; x < b[y].size(); ++x) {
      p.set_coeff(monomial(static_cast<int>(x), static_cast<int>(y)), b[y][x]);
    }
  }
  return p;
}

Polynomial from_upoly(const PrimeField& field, const UPoly& u) {
  Polynomial p(field);
  for (std::size_t x = 0; x < u.size(); ++x) p.set_coeff(monomial(static_cast<int>(x), 0), u[x]);
  return p;
}

class Bivariate {
 public:
  explicit Bivariate(const PrimeField& f) : u_(f) {}

  BPoly scale(const BPoly& a, const UPoly& c) const {
    BPoly r;
    for (const auto& v : a) r.push_back(u_.mul(v, c));
    trim(r);
    return r;
  }
  BPoly sub(const BPoly& a, const BPoly& b) const {
    BPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] = u_.sub(i < a.size() ? a[i] : UPoly{}, i < b.size() ? b[i] : UPoly{});
    }
    trim(r);
    return r;
  }

  // lc(b)^(deg a - deg b + 1) a mod b.
  BPoly prem(BPoly a, const BPoly& b) const {
    const UPoly& lc = b.back();
    while (!a.empty() && deg_y(a) >= deg_y(b)) {
      const std::size_t shift = a.size() - b.size();
      const UPoly top = a.back();
      a = scale(a, lc);
      BPoly t(shift, UPoly{});
      for (const auto& c : b) t.push_back(u_.mul(c, top));
      a = sub(a, t);
    }
    return a;
  }

  UPoly content(const BPoly& a) const {
    UPoly g;
    for (const auto& c : a) g = u_.gcd(g, c);
    return g;
  }
  BPoly primitive(const BPoly& a) const {
    if (a.empty()) return a;
    const UPoly c = content(a);
    BPoly r;
    for (const auto& v : a) r.push_back(u_.quo(v, c));
    // Normalize the leading coefficient's leading term to 1.
    const FieldElement lead = r.back().back();
    const UPoly inv = u_.constant(u_.field().inv(lead));
    return scale(r, inv);
  }

  // gcd in F_p[x][y], normalized by primitive().
  BPoly gcd(const BPoly& a, const BPoly& b) const {
    const UPoly c = u_.gcd(content(a), content(b));
    BPoly x = primitive(a);
    BPoly y = primitive(b);
    if (deg_y(x) < deg_y(y)) std::swap(x, y);
    while (!y.empty()) {
      BPoly r = prem(x, y);
      x = std::move(y);
      y = primitive(r);
    }
    return scale(x, c);
  }

  // a / b when lc_y(b) is a nonzero constant and b divides a.
  BPoly divide(BPoly a, const BPoly& b) const {
    if (Univariate::deg(b.back()) != 0) throw std::logic_error("divisor needs constant leading coefficient");
    const UPoly inv = u_.constant(u_.field().inv(b.back()[0]));
    BPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (!a.empty() && deg_y(a) >= deg_y(b)) {
      const std::size_t shift = a.size() - b.size();
      const UPoly c = u_.mul(a.back(), inv);
      q[shift] = c;
      BPoly t(shift, UPoly{});
      for (const auto& v : b) t.push_back(u_.mul(v, c));
      a = sub(a, t);
    }
    if (!a.empty()) throw std::logic_error("inexact bivariate division");
    trim(q);
    return q;
  }

  // Determinant of the Sylvester matrix by fraction-free Bareiss elimination.
  UPoly resultant(const BPoly& f, const BPoly& g) const {
    const int m = deg_y(f);
    const int n = deg_y(g);
    if (m < 0 || n < 0) return {};
    const auto size = static_cast<std::size_t>(m + n);
    if (size == 0) return u_.constant(u_.field().one());
    std::vector<std::vector<UPoly>> mat(size, std::vector<UPoly>(size));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k <= m; ++k) mat[i][i + k] = f[static_cast<std::size_t>(m - k)];
    }
    for (int i = 0; i < m; ++i) {
      for (int k = 0; k <= n; ++k) mat[n + i][i + k] = g[static_cast<std::size_t>(n - k)];
    }
    bool negate = false;
    UPoly prev = u_.constant(u_.field().one());
    for (std::size_t k = 0; k + 1 < size; ++k) {
      if (mat[k][k].empty()) {
        std::size_t r = k + 1;
        while (r < size && mat[r][k].empty()) ++r;
        if (r == size) return {};
        std::swap(mat[k], mat[r]);
        negate = !negate;
      }
      for (std::size_t i = k + 1; i < size; ++i) {
        for (std::size_t j = k + 1; j < size; ++j) {
          const UPoly num = u_.sub(u_.mul(mat[i][j], mat[k][k]), u_.mul(mat[i][k], mat[k][j]));
          mat[i][j] = u_.quo(num, prev);
        }
        mat[i][k].clear();
      }
      prev = mat[k][k];
    }
    UPoly det = mat[size - 1][size - 1];
    return negate ? u_.scale(det, u_.field().neg(u_.field().one())) : det;
  }

  const Univariate& uni() const { return u_; }

 private:
  Univariate u_;
};

// Whether some factor field of F_p[x]/(m), m squarefree, has a common root
// in y of all polynomials. A zero divisor met while computing the gcd splits
// m and both parts are examined.
class DynamicGcd {
 public:
  explicit DynamicGcd(const Univariate& u) : u_(u) {}

  bool common_root(const UPoly& m, const std::vector<BPoly>& polys) const {
    std::vector<BPoly> reduced;
    for (const auto& p : polys) {
      BPoly r;
      for (const auto& c : p) r.push_back(u_.mod(c, m));
      trim(r);
      reduced.push_back(std::move(r));
    }
    BPoly g = reduced[0];
    for (std::size_t i = 1; i < reduced.size(); ++i) {
      auto step = gcd(g, reduced[i], m);
      if (!step.first.empty()) {
        return common_root(step.first, polys) || common_root(step.second, polys);
      }
      g = std::move(g_);
    }
    // A zero polynomial leaves y free, so every root of m works.
    return g.empty() || deg_y(g) >= 1;
  }

 private:
  // On success stores the gcd in g_ and returns empty factors; otherwise
  // returns a nontrivial factorization of m.
  std::pair<UPoly, UPoly> gcd(BPoly a, BPoly b, const UPoly& m) const {
    while (!b.empty()) {
      const UPoly g = u_.gcd(b.back(), m);
      if (Univariate::deg(g) > 0) return {g, u_.quo(m, g)};
      const UPoly inv = u_.inverse_mod(b.back(), m);
      while (!a.empty() && deg_y(a) >= deg_y(b)) {
        const std::size_t shift = a.size() - b.size();
        const UPoly c = u_.mod(u_.mul(a.back(), inv), m);
        for (std::size_t i = 0; i < b.size(); ++i) {
          a[shift + i] = u_.mod(u_.sub(a[shift + i], u_.mul(c, b[i])), m);
        }
        trim(a);
      }
      std::swap(a, b);
    }
    g_ = std::move(a);
    return {};
  }

  const Univariate& u_;
  mutable BPoly g_;
};

// f(x + lambda y, y).
Polynomial shear(const Polynomial& f, FieldElement lambda) {
  const PrimeField& field = f.field();
  const auto x = Polynomial::variable(field, Var::X);
  const auto y = Polynomial::variable(field, Var::Y);
  const auto z = Polynomial::variable(field, Var::Z);
  return f.substitute({x + y.scaled(lambda), y, z});
}

bool affine_common_zero(const PrimeField& field, std::vector<Polynomial> polys) {
  polys.erase(std::remove_if(polys.begin(), polys.end(), [](const Polynomial& p) { return p.is_zero(); }),
              polys.end());
  if (polys.empty()) return true;
  for (const auto& p : polys) {
    if (p.is_constant()) return false;
  }
  if (polys.size() == 1) return true;

  // The y^deg coefficient of f(x + lambda y, y) is the top form of f at (lambda, 1).
  const Polynomial top0 = polys[0].homogeneous_part(polys[0].degree());
  const Polynomial top1 = polys[1].homogeneous_part(polys[1].degree());
  std::optional<FieldElement> lambda;
  for (std::uint64_t t = 0; t < field.modulus() && !lambda; ++t) {
    const FieldElement l = field.from_uint(t);
    if (!top0.evaluate(l, field.one(), field.one()).is_zero() &&
        !top1.evaluate(l, field.one(), field.one()).is_zero()) {
      lambda = l;
    }
  }
  if (!lambda) throw DegenerateInput("prime too small to bring the system into general position");
  for (auto& p : polys) p = shear(p, *lambda);

  const Bivariate bi(field);
  const BPoly f = to_bpoly(polys[0]);
  const BPoly g = to_bpoly(polys[1]);
  const BPoly c = bi.gcd(f, g);
  if (deg_y(c) >= 1) {
    std::vector<Polynomial> with_c = {from_bpoly(field, c)};
    std::vector<Polynomial> coprime = {from_bpoly(field, bi.divide(f, c)),
                                       from_bpoly(field, bi.divide(g, c))};
    for (std::size_t i = 2; i < polys.size(); ++i) {
      with_c.push_back(polys[i]);
      coprime.push_back(polys[i]);
    }
    return affine_common_zero(field, std::move(with_c)) ||
           affine_common_zero(field, std::move(coprime));
  }

  const UPoly r = bi.resultant(f, g);
  if (Univariate::deg(r) <= 0) return false;
  const UPoly m = bi.uni().radical(r);
  std::vector<BPoly> all;
  for (const auto& p : polys) all.push_back(to_bpoly(p));
  return DynamicGcd(bi.uni()).common_root(m, all);
}

}  // namespace

Polynomial resultant_y(const Polynomial& f, const Polynomial& g) {
  const Bivariate bi(f.field());
  return from_upoly(f.field(), bi.resultant(to_bpoly(f), to_bpoly(g)));
}

bool has_affine_common_zero(const PrimeField& field, const std::vector<Polynomial>& polys) {
  for (const auto& p : polys) {
    if (p.uses(Var::Z)) throw std::invalid_argument("expected polynomials in x, y");
  }
  return affine_common_zero(field, polys);
}

bool has_line_common_zero(const PrimeField& field, const std::vector<Polynomial>& forms) {
  std::vector<const Polynomial*> live;
  for (const auto& f : forms) {
    if (f.uses(Var::Z) || !f.is_homogeneous()) throw std::invalid_argument("expected binary forms");
    if (!f.is_zero()) live.push_back(&f);
  }
  if (live.empty()) return true;
  // The point (1 : 0).
  bool at_x = true;
  for (const Polynomial* f : live) {
    if (!f->coeff(monomial(f->degree(), 0)).is_zero()) at_x = false;
  }
  if (at_x) return true;
  // The chart y = 1.
  const Univariate u(field);
  UPoly g;
  for (const Polynomial* f : live) {
    UPoly a;
    for (const auto& [m, c] : f->terms()) {
      const auto x = static_cast<std::size_t>(m[Var::X]);
      if (a.size() <= x) a.resize(x + 1);
      a[x] = c;
    }
    Univariate::trim(a);
    g = u.gcd(g, a);
  }
  return Univariate::deg(g) >= 1;
}

bool has_projective_common_zero(const PrimeField& field, const std::vector<Polynomial>& forms) {
  std::vector<Polynomial> chart;
  std::vector<Polynomial> infinity;
  for (const auto& f : forms) {
    if (!f.is_homogeneous()) throw std::invalid_argument("expected homogeneous polynomials");
    chart.push_back(f.specialize(Var::Z, field.one()));
    infinity.push_back(f.specialize(Var::Z, field.zero()));
  }
  return affine_common_zero(field, chart) || has_line_common_zero(field, infinity);
}

}  // namespace focal
