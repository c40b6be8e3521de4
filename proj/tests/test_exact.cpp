#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dybe/poly.hpp"
#include "dybe/rat.hpp"
#include "dybe/ratfun.hpp"
#include "dybe/rng.hpp"
#include "dybe/series.hpp"
#include "dybe/weights.hpp"
#include "testutil.hpp"

using namespace dybe;

namespace {

RatFun X1() { return RatFun::variable(1, 0); }
RatFun C1(long k) { return RatFun::from_rat(1, Rat(k)); }

Poly rand_poly(SplitMix64& g, int nvars, int terms) {
  Poly p(nvars);
  for (int t = 0; t < terms; ++t) {
    Mono m{std::vector<int>(nvars, 0)};
    for (int v = 0; v < nvars; ++v) m.e[v] = static_cast<int>(g.below(3));
    p.add_term(m, Rat(static_cast<long>(g.below(19)) - 9));
  }
  return p;
}

Poly rand_nonzero(SplitMix64& g, int nvars, int terms) {
  for (;;) {
    Poly p = rand_poly(g, nvars, terms);
    if (!p.is_zero()) return p;
  }
}

RatFun rand_ratfun(SplitMix64& g, int nvars) {
  return RatFun(rand_poly(g, nvars, 2), rand_nonzero(g, nvars, 2));
}

}  // namespace

TEST_CASE("rational numbers stay canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(-2, -4) == Rat(1, 2));
  CHECK(Rat(2, -4) == Rat(-1, 2));
  CHECK(Rat(2, -4).den() == 2);  // denominator kept positive
  CHECK(Rat(0, 5) == Rat(0));
  CHECK(Rat(7).is_integer());
  CHECK_FALSE(Rat(7, 2).is_integer());
  CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  CHECK(Rat(1, 3) * Rat(3, 5) == Rat(1, 5));
  CHECK(Rat(1, 3) - Rat(1, 3) == Rat(0));
  CHECK(Rat(2, 3) / Rat(4, 9) == Rat(3, 2));
  CHECK(Rat(-5, 7).sign() == -1);
  CHECK(Rat(3, 4).inv() == Rat(4, 3));
  CHECK_THROWS_AS(Rat(0).inv(), Error);
  CHECK_THROWS_AS(Rat(1) / Rat(0), Error);
  CHECK_THROWS_AS(Rat(1, 0), Error);
  CHECK(Rat(2, 3).pow(3) == Rat(8, 27));
  CHECK(Rat(2, 3).pow(-2) == Rat(9, 4));
  CHECK(Rat(5, 1).str() == "5");
  CHECK(Rat(-5, 3).str() == "-5/3");
  CHECK(Rat::from_string("-14/21") == Rat(-2, 3));
  CHECK_THROWS_AS(Rat::from_string("two"), BadRequest);
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(abs(Rat(-3, 4)) == Rat(3, 4));
}

TEST_CASE("polynomial gcd and exact division") {
  SplitMix64 g(11);
  for (int i = 0; i < 100; ++i) {
    Poly a = rand_nonzero(g, 2, 3);
    Poly b = rand_nonzero(g, 2, 3);
    Poly h = Poly::gcd(a, b);
    CHECK_FALSE(h.is_zero());
    CHECK(h.leading_coeff().is_one());  // gcd normalized monic
    CHECK((a * b).divexact(b) == a);
    CHECK(a.divexact(h) * h == a);
    CHECK(b.divexact(h) * h == b);
  }
  // division with a remainder must be refused, not rounded
  Poly x = Poly::variable(1, 0);
  Poly xp1 = x + Poly::constant(1, Rat(1));
  CHECK_THROWS_AS((x * x).divexact(xp1), Error);
  CHECK(Poly::gcd(Poly(2), rand_nonzero(g, 2, 2)).leading_coeff().is_one());
}

TEST_CASE("rational functions reduce to a unique canonical form") {
  SplitMix64 g(12);
  for (int i = 0; i < 1000; ++i) {
    Poly n = rand_poly(g, 2, 2);
    Poly d = rand_nonzero(g, 2, 2);
    Poly c = rand_nonzero(g, 2, 2);
    RatFun f(n, d);
    CHECK(RatFun(n * c, d * c) == f);           // common factors cancel
    CHECK(RatFun(f.num(), f.den()) == f);       // canonicalizing is idempotent
    CHECK(f.den().leading_coeff().is_one());    // denominator monic
    CHECK(Poly::gcd(f.num(), f.den()).is_constant());  // fully reduced
  }
  CHECK(RatFun(Poly(2), rand_nonzero(g, 2, 3)).is_zero());
  CHECK_THROWS_AS(RatFun(Poly::constant(1, Rat(1)), Poly(1)), Error);
}

TEST_CASE("rational function field axioms") {
  SplitMix64 g(13);
  for (int i = 0; i < 40; ++i) {
    RatFun f = rand_ratfun(g, 2);
    RatFun h = rand_ratfun(g, 2);
    RatFun k = rand_ratfun(g, 2);
    CHECK((f + h) + k == f + (h + k));
    CHECK((f * h) * k == f * (h * k));
    CHECK(f * h == h * f);
    CHECK(f * (h + k) == f * h + f * k);
    CHECK(f - f == RatFun(2));
    if (!h.is_zero()) {
      CHECK(f / h * h == f);
      CHECK(h * h.inv() == RatFun::from_rat(2, Rat(1)));
    }
  }
  CHECK_THROWS_AS(RatFun::variable(1, 0) / RatFun(1), Error);
}

TEST_CASE("argument shifts") {
  RatFun f = C1(1) / (X1() + C1(1));
  CHECK(f.shifted({Rat(2)}) == C1(1) / (X1() + C1(3)));
  CHECK(X1().shifted({Rat(0)}) == X1());
  CHECK((X1() + C1(2)) / (X1() + C1(1)) == testutil::parse_ratfun("(x1+2)/(x1+1)", 1));
  CHECK(((X1() + C1(2)) / (X1() + C1(1))).shifted({Rat(-1)}) == (X1() + C1(1)) / X1());

  SplitMix64 g(14);
  for (int i = 0; i < 25; ++i) {
    RatFun f2 = rand_ratfun(g, 2);
    std::vector<Rat> a{Rat(static_cast<long>(g.below(9)) - 4), Rat(static_cast<long>(g.below(7)), 3)};
    std::vector<Rat> b{Rat(static_cast<long>(g.below(9)) - 4), Rat(static_cast<long>(g.below(7)), 2)};
    // shifting twice equals shifting by the sum
    CHECK(f2.shifted(a).shifted(b) == f2.shifted({a[0] + b[0], a[1] + b[1]}));
  }
  // affine substitution x -> -x-1 composed twice is the identity
  for (int i = 0; i < 25; ++i) {
    RatFun f3 = rand_ratfun(g, 2);
    RatFun once = f3.subst_affine({-1, -1}, {Rat(-1), Rat(-1)});
    CHECK(once.subst_affine({-1, -1}, {Rat(-1), Rat(-1)}) == f3);
  }
}

TEST_CASE("evaluation agrees with shifting and flags poles") {
  RatFun f = C1(1) / (X1() + C1(1));
  CHECK(f.eval({Rat(3)}) == Rat(1, 4));
  CHECK_THROWS_AS(f.eval({Rat(-1)}), PoleAtPoint);
  CHECK(((X1() + C1(2)) / (X1() + C1(1))).eval({Rat(1, 2)}) == Rat(5, 3));

  SplitMix64 g(15);
  for (int i = 0; i < 40; ++i) {
    RatFun f2 = rand_ratfun(g, 2);
    std::vector<Rat> p{Rat(static_cast<long>(g.below(40)) + 20), Rat(static_cast<long>(g.below(40)) + 61)};
    std::vector<Rat> s{Rat(static_cast<long>(g.below(5))), Rat(static_cast<long>(g.below(5)))};
    try {
      Rat direct = f2.eval({p[0] + s[0], p[1] + s[1]});
      CHECK(f2.shifted(s).eval(p) == direct);  // eval after shift = eval at shifted point
    } catch (const PoleAtPoint&) {
      // a pole wandered onto the sample; both orders must agree on that too
      CHECK_THROWS_AS(f2.shifted(s).eval(p), PoleAtPoint);
    }
  }
}

TEST_CASE("string output round-trips through the parser") {
  CHECK((C1(1) / (X1() + C1(1))).str("x") == "1/(x1+1)");
  CHECK((-(C1(1) / (X1() + C1(1)))).str("x") == "-1/(x1+1)");
  CHECK((-(C1(1) / X1())).str("x") == "-1/x1");
  CHECK(((X1() + C1(2)) / (X1() + C1(1))).str("x") == "(x1+2)/(x1+1)");
  RatFun sq = (X1() * X1() + C1(2) * X1()) / (X1() * X1() + C1(2) * X1() + C1(1));
  CHECK(sq.str("x") == "(x1^2+2*x1)/(x1^2+2*x1+1)");
  CHECK(RatFun::from_rat(1, Rat(-3, 7)).str("x") == "-3/7");
  CHECK(RatFun(1).str("x") == "0");
  CHECK(RatFun::variable(2, 1).str("m") == "m2");

  SplitMix64 g(16);
  for (int i = 0; i < 200; ++i) {
    RatFun f = rand_ratfun(g, 2);
    CHECK(testutil::parse_ratfun(f.str("x"), 2) == f);
    CHECK(testutil::parse_ratfun(f.str("m"), 2, "m") == f);
  }
}

TEST_CASE("series truncation and the unit element") {
  RootSystem rs(1);
  LatticeWeight alpha = rs.simple_root(0);
  LatticeWeight zero = rs.zero();
  RatFun one = RatFun::from_rat(1, Rat(1));

  ExpSeries unit(rs, Rat(10));
  unit.add_term(zero, one);
  ExpSeries b(rs, Rat(12));
  b.add_term(alpha, one);
  b.add_term(alpha + alpha, RatFun::from_rat(1, Rat(7)));
  b.add_term(alpha.scaled(Rat(13)), one);  // beyond the bound: dropped on insertion
  CHECK(b.terms().size() == 2);

  ExpSeries p = unit * b;
  CHECK(p.order() == Rat(10));  // products truncate to the smaller order
  CHECK(p.terms() == b.truncated(Rat(10)).terms());
  CHECK(b.truncated(Rat(1)).terms().size() == 1);

  // coefficients that cancel disappear from the term map entirely
  ExpSeries c(rs, Rat(5));
  c.add_term(alpha, one);
  c.add_term(alpha, -one);
  CHECK(c.is_zero());
  CHECK(c.coeff(alpha).is_zero());
}

TEST_CASE("series multiplication telescopes geometric sums exactly") {
  RootSystem rs(1);
  LatticeWeight alpha = rs.simple_root(0);
  RatFun one = RatFun::from_rat(1, Rat(1));

  ExpSeries geom(rs, Rat(10));
  LatticeWeight e = rs.zero();
  for (int k = 0; k <= 10; ++k) {
    geom.add_term(e, one);
    e = e + alpha;
  }
  ExpSeries fac(rs, Rat(10));
  fac.add_term(rs.zero(), one);
  fac.add_term(alpha, -one);

  ExpSeries tele = fac * geom;  // (1 - t)(1 + t + ... + t^10) = 1 up to order 10
  CHECK(tele.terms().size() == 1);
  CHECK(tele.coeff(rs.zero()) == one);
}

TEST_CASE("series multiplication is commutative and associative") {
  RootSystem rs(2);
  SplitMix64 g(17);
  auto rand_series = [&](Rat ord) {
    ExpSeries s(rs, ord);
    for (int t = 0; t < 4; ++t) {
      LatticeWeight xi = rs.simple_root(0).scaled(Rat(static_cast<long>(g.below(3)))) +
                         rs.simple_root(1).scaled(Rat(static_cast<long>(g.below(3))));
      s.add_term(xi, RatFun::from_rat(2, Rat(static_cast<long>(g.below(9)) - 4)));
    }
    return s;
  };
  for (int i = 0; i < 20; ++i) {
    ExpSeries a = rand_series(Rat(6));
    ExpSeries b = rand_series(Rat(6));
    ExpSeries c = rand_series(Rat(6));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("at most one factor of a product may carry a prefactor") {
  RootSystem rs(1);
  RatFun one = RatFun::from_rat(1, Rat(1));
  ExpSeries a(rs, Rat(4), Prefactor::MinusMu);
  a.add_term(rs.zero(), one);
  ExpSeries b(rs, Rat(4), Prefactor::MinusMu);
  b.add_term(rs.zero(), one);
  ExpSeries plain(rs, Rat(4));
  plain.add_term(rs.simple_root(0), one);

  CHECK_THROWS_AS(a * b, BothPrefactored);
  CHECK((a * plain).prefactor() == Prefactor::MinusMu);
  CHECK((plain * a).prefactor() == Prefactor::MinusMu);
  CHECK_THROWS_AS(a + plain, Error);  // sums must agree on the prefactor too

  ExpSeries pm(rs, Rat(4), Prefactor::PlusMu);
  pm.add_term(rs.zero(), one);
  CHECK((pm * plain).prefactor() == Prefactor::PlusMu);
}

TEST_CASE("series exponent shifts move the order bound with the terms") {
  RootSystem rs(1);
  RatFun m = RatFun::variable(1, 0);
  ExpSeries s(rs, Rat(2));
  s.add_term(rs.simple_root(0), m);

  ExpSeries t = s.exponent_shifted(rs.rho());
  CHECK(t.order() == Rat(2) + Rat(1, 2));
  CHECK(t.coeff(rs.simple_root(0) + rs.rho()) == m);
  CHECK(t.terms().size() == 1);

  ExpSeries u = s.coeff_subst({-1}, {Rat(-1)});  // m -> -m - 1
  CHECK(u.coeff(rs.simple_root(0)) == -m - RatFun::from_rat(1, Rat(1)));
  CHECK(u.order() == s.order());

  ExpSeries v = s.scaled(m);
  CHECK(v.coeff(rs.simple_root(0)) == m * m);
}

TEST_CASE("Weyl denominator expansion on one variable") {
  RootSystem rs(1);
  RatFun one = RatFun::from_rat(1, Rat(1));
  ExpSeries d = weyl_denominator(rs, Rat(3));
  LatticeWeight mrho = -rs.rho();
  CHECK(d.terms().size() == 2);
  CHECK(d.coeff(mrho) == one);
  CHECK(d.coeff(mrho + rs.simple_root(0)) == -one);
  // at order 0 only the leading exponent (height -1/2) survives
  CHECK(weyl_denominator(rs, Rat(0)).terms().size() == 1);
}

TEST_CASE("Weyl denominator times the full character series is one") {
  // The denominator times the product of all geometric series
  // 1/(1 - e^{-alpha}) telescopes to the single leading exponent.  Each
  // factor is carried ht(rho) beyond the product order: the denominator
  // reaches down to height -ht(rho), so shallower factors would leak
  // incomplete cross terms into the reported window.
  for (int rank = 1; rank <= 2; ++rank) {
    RootSystem rs(rank);
    const Rat order(5);
    const Rat reach = order + rs.height(rs.rho());
    RatFun one = RatFun::from_rat(rank, Rat(1));
    ExpSeries prod = weyl_denominator(rs, order);
    for (const LatticeWeight& alpha : rs.positive_roots()) {
      ExpSeries geom(rs, reach);
      LatticeWeight e = rs.zero();
      while (rs.height(e) <= reach) {
        geom.add_term(e, one);
        e = e + alpha;
      }
      prod = prod * geom;
    }
    CHECK(prod.order() == order);
    CHECK(prod.terms().size() == 1);
    CHECK(prod.coeff(-rs.rho()) == one);
  }
}
