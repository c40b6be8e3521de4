#include "poly.hpp"

#include <algorithm>
#include <cassert>

namespace dybe {

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (!c.is_zero()) p.terms_[Mono{std::vector<int>(nvars, 0)}] = c;
  return p;
}

Poly Poly::variable(int nvars, int i) {
  assert(i >= 0 && i < nvars);
  Poly p(nvars);
  Mono m{std::vector<int>(nvars, 0)};
  m.e[i] = 1;
  p.terms_[m] = Rat(1);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

Rat Poly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  assert(is_constant());
  return terms_.begin()->second;
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return terms_.rbegin()->first.degree();
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.e[var]);
  return d;
}

const Mono& Poly::leading_mono() const {
  assert(!terms_.empty());
  return terms_.rbegin()->first;
}

const Rat& Poly::leading_coeff() const {
  assert(!terms_.empty());
  return terms_.rbegin()->second;
}

void Poly::add_term(const Mono& m, const Rat& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  assert(nvars_ == o.nvars_);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  assert(a.nvars_ == b.nvars_);
  Poly r(a.nvars_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Mono m = ma;
      for (size_t i = 0; i < m.e.size(); ++i) m.e[i] += mb.e[i];
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rat& c) const {
  Poly r(nvars_);
  if (c.is_zero()) return r;
  for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  assert((int)point.size() == nvars_);
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat t = c;
    for (int i = 0; i < nvars_; ++i)
      if (m.e[i]) t *= point[i].pow(m.e[i]);
    acc += t;
  }
  return acc;
}

Poly Poly::subst_affine(const std::vector<int>& signs, const std::vector<Rat>& shifts) const {
  assert((int)signs.size() == nvars_ && (int)shifts.size() == nvars_);
  Poly cur = *this;
  for (int v = 0; v < nvars_; ++v) {
    if (signs[v] == 1 && shifts[v].is_zero()) continue;
    // binomial expansion of (s*x + c)^e, one variable at a time
    int maxe = cur.degree_in(v);
    std::vector<std::vector<Rat>> binom(maxe + 1);
    for (int n = 0; n <= maxe; ++n) {
      binom[n].resize(n + 1, Rat(1));
      for (int k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
    }
    Poly next(nvars_);
    for (const auto& [m, c] : cur.terms_) {
      int e = m.e[v];
      if (e == 0) {
        next.add_term(m, c);
        continue;
      }
      for (int j = 0; j <= e; ++j) {
        Rat coeff = c * binom[e][j] * shifts[v].pow(e - j);
        if (signs[v] < 0 && (j & 1)) coeff = -coeff;
        if (coeff.is_zero()) continue;
        Mono mm = m;
        mm.e[v] = j;
        next.add_term(mm, coeff);
      }
    }
    cur = std::move(next);
  }
  return cur;
}

Poly Poly::shifted(const std::vector<Rat>& shifts) const {
  return subst_affine(std::vector<int>(nvars_, 1), shifts);
}

Poly Poly::divexact(const Poly& d) const {
  assert(nvars_ == d.nvars_);
  if (d.is_zero()) throw Error("polynomial division by zero");
  Poly q(nvars_), r = *this;
  const Mono& dm = d.leading_mono();
  const Rat& dc = d.leading_coeff();
  while (!r.is_zero()) {
    const Mono& rm = r.leading_mono();
    Mono t{std::vector<int>(nvars_, 0)};
    bool divides = true;
    for (int i = 0; i < nvars_; ++i) {
      t.e[i] = rm.e[i] - dm.e[i];
      if (t.e[i] < 0) { divides = false; break; }
    }
    if (!divides) throw Error("inexact polynomial division");
    Rat tc = r.leading_coeff() / dc;
    Poly term(nvars_);
    term.terms_.emplace(t, tc);
    q += term;
    r -= term * d;
  }
  return q;
}

namespace {

// lead coefficient of p viewed in the single variable v (a poly without v)
Poly lead_coeff_in(const Poly& p, int v) {
  int d = p.degree_in(v);
  Poly r(p.nvars());
  for (const auto& [m, c] : p.terms()) {
    if (m.e[v] != d) continue;
    Mono mm = m;
    mm.e[v] = 0;
    r.add_term(mm, c);
  }
  return r;
}

Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coeff().inv());
}

// gcd(numerators)/lcm(denominators) > 0; dividing by it leaves coprime
// integer coefficients, which keeps the primitive remainder sequence tame
Rat rat_content(const Poly& p) {
  mpz_class g = 0, l = 1;
  for (const auto& [m, c] : p.terms()) {
    mpz_class n = c.num(), d = c.den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  if (g == 0) return Rat(1);
  return Rat(mpq_class(g, l));
}

int main_var(const Poly& a, const Poly& b) {
  for (int v = a.nvars() - 1; v >= 0; --v)
    if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
  return -1;
}

// content of p w.r.t. v: gcd of its v-coefficients
Poly content_in(const Poly& p, int v) {
  std::vector<Poly> coeffs(p.degree_in(v) + 1, Poly(p.nvars()));
  for (const auto& [m, c] : p.terms()) {
    Mono mm = m;
    int e = mm.e[v];
    mm.e[v] = 0;
    Poly t(p.nvars());
    t.add_term(mm, c);
    coeffs[e] += t;
  }
  Poly g(p.nvars());
  for (const Poly& c : coeffs) g = Poly::gcd(g, c);
  return g;
}

Poly primitive_in(const Poly& p, int v) {
  if (p.is_zero()) return p;
  Poly pp = p.divexact(content_in(p, v));
  return pp.divexact(Poly::constant(p.nvars(), rat_content(pp)));
}

// pseudo-remainder of a by b in variable v
Poly prem(Poly a, const Poly& b, int v) {
  const Poly lb = lead_coeff_in(b, v);
  const int db = b.degree_in(v);
  while (!a.is_zero() && a.degree_in(v) >= db) {
    int da = a.degree_in(v);
    Poly la = lead_coeff_in(a, v);
    Poly shift = Poly::variable(a.nvars(), v);
    Poly xpow = Poly::constant(a.nvars(), Rat(1));
    for (int i = 0; i < da - db; ++i) xpow *= shift;
    a = a * lb - b * la * xpow;
  }
  return a;
}

}  // namespace

Poly Poly::gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return constant(a.nvars(), Rat(1));
  int v = main_var(a, b);
  Poly ca = content_in(a, v), cb = content_in(b, v);
  Poly g0 = gcd(ca, cb);
  Poly pa = a.divexact(ca), pb = b.divexact(cb);
  if (pa.degree_in(v) == 0 || pb.degree_in(v) == 0) return monic(g0);
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);
  // primitive remainder sequence in v
  while (true) {
    Poly r = prem(pa, pb, v);
    if (r.is_zero()) break;
    pa = std::move(pb);
    pb = primitive_in(r, v);
  }
  return monic(g0 * primitive_in(pb, v));
}

std::string Poly::str(const std::string& var_prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  // leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string mono;
    for (size_t i = 0; i < m.e.size(); ++i) {
      if (m.e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_prefix + std::to_string(i + 1);
      if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
    }
    std::string term;
    if (mono.empty()) {
      term = c.str();
    } else if (c.is_one()) {
      term = mono;
    } else if ((-c).is_one()) {
      term = "-" + mono;
    } else {
      term = c.str() + "*" + mono;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += term;
    } else {
      out += "+" + term;
    }
  }
  return out;
}

}  // namespace dybe
