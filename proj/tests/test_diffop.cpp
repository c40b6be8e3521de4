#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dybe/diffop.hpp"
#include "dybe/trace.hpp"

using namespace dybe;

namespace {

RatFun C(long k) { return RatFun::from_rat(1, Rat(k)); }
RatFun X() { return RatFun::variable(1, 0); }

Matrix<RatFun> one_by_one(const RatFun& v) {
  Matrix<RatFun> m(1, 1, zero_like(v));
  m.at(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("operator from the two-dimensional module has the closed-form coefficients") {
  RootSystem rs(1);
  ModPtr v = irrep(rs, rs.fundamental_weight(0));
  ModPtr u = irrep(rs, rs.fundamental_weight(0).scaled(Rat(2)));
  DiffOp d = difference_operator(rs, v, u);

  CHECK(d.u0 == std::vector<int>{1});
  REQUIRE(d.coeffs.size() == 2);
  LatticeWeight om = rs.fundamental_weight(0);
  REQUIRE(d.coeffs.count(om) == 1);
  REQUIRE(d.coeffs.count(-om) == 1);
  // derived by eliminating the two 2x2 triangular weight blocks by hand:
  // the shift up has coefficient 1, the shift down carries the rational drop
  CHECK(d.coeffs.at(om).at(0, 0) == C(1));
  CHECK(d.coeffs.at(-om).at(0, 0) == C(1) - (C(1) + C(1)) / (X() * (X() - C(1))));
}

TEST_CASE("trivial legs give identity operators") {
  RootSystem rs(1);
  ModPtr u = irrep(rs, rs.fundamental_weight(0).scaled(Rat(2)));
  ModPtr v = irrep(rs, rs.fundamental_weight(0));
  ModPtr triv = trivial_module(rs);

  // trivial acting module: a single unshifted identity coefficient
  DiffOp id = difference_operator(rs, triv, u);
  REQUIRE(id.coeffs.size() == 1);
  CHECK(id.coeffs.count(rs.zero()) == 1);
  CHECK(id.coeffs.at(rs.zero()) == Matrix<RatFun>::identity(1, RatFun(1)));

  // trivial target module: plain shifts weighted by weight multiplicities
  DiffOp shifts = difference_operator(rs, v, triv);
  REQUIRE(shifts.coeffs.size() == 2);
  CHECK(shifts.coeffs.at(rs.fundamental_weight(0)).at(0, 0) == C(1));
  CHECK(shifts.coeffs.at(-rs.fundamental_weight(0)).at(0, 0) == C(1));

  // identity composes neutrally on either side
  DiffOp dv = difference_operator(rs, v, u);
  CHECK(compose(id, dv) == dv);
  CHECK(compose(dv, id) == dv);
}

TEST_CASE("modules without a zero weight space are rejected as targets") {
  RootSystem rs(1);
  ModPtr v = irrep(rs, rs.fundamental_weight(0));
  ModPtr w = irrep(rs, rs.fundamental_weight(0).scaled(Rat(2)));
  CHECK_THROWS_AS(difference_operator(rs, w, v), EmptyZeroWeightSpace);
}

TEST_CASE("composition shifts the right factor before multiplying") {
  RootSystem rs(1);
  LatticeWeight alpha = rs.simple_root(0);
  DiffOp a{rs, {0}, {}};
  a.coeffs.emplace(alpha, one_by_one(X()));
  DiffOp b{rs, {0}, {}};
  b.coeffs.emplace(-alpha, one_by_one(X() + C(3)));

  // (x T_alpha)((x+3) T_{-alpha}) = x (x+2+3) T_0
  DiffOp ab = compose(a, b);
  REQUIRE(ab.coeffs.size() == 1);
  CHECK(ab.coeffs.at(rs.zero()).at(0, 0) == X() * (X() + C(5)));

  // the other order shifts by -2 instead
  DiffOp ba = compose(b, a);
  REQUIRE(ba.coeffs.size() == 1);
  CHECK(ba.coeffs.at(rs.zero()).at(0, 0) == (X() + C(3)) * (X() - C(2)));

  // cancelling coefficients drop out of the composite
  DiffOp c{rs, {0}, {}};
  c.coeffs.emplace(rs.zero(), one_by_one(C(1)));
  c.coeffs.emplace(alpha, one_by_one(C(1)));
  DiffOp d{rs, {0}, {}};
  d.coeffs.emplace(rs.zero(), one_by_one(C(1)));
  d.coeffs.emplace(alpha, one_by_one(-C(1)));
  DiffOp cd = compose(c, d);
  CHECK(cd.coeffs.count(alpha) == 0);  // 1*(-1) + 1*1 cancels
  CHECK(cd.coeffs.count(rs.zero()) == 1);
  CHECK(cd.coeffs.count(alpha + alpha) == 1);

  // mismatched zero weight spaces cannot compose
  DiffOp e{rs, {0, 1}, {}};
  CHECK_THROWS_AS(compose(a, e), BadRequest);
}

TEST_CASE("composition is associative") {
  RootSystem rs(1);
  LatticeWeight alpha = rs.simple_root(0);
  auto mk = [&](std::initializer_list<std::pair<LatticeWeight, RatFun>> terms) {
    DiffOp d{rs, {0}, {}};
    for (const auto& [nu, c] : terms) d.coeffs.emplace(nu, one_by_one(c));
    return d;
  };
  DiffOp a = mk({{alpha, X()}, {-alpha, C(1) / (X() + C(1))}});
  DiffOp b = mk({{rs.zero(), X() + C(2)}, {alpha, C(7)}});
  DiffOp c = mk({{-alpha, X() * X()}});
  CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
}

TEST_CASE("composite keys are sums of the factor shifts") {
  RootSystem rs(1);
  ModPtr v = irrep(rs, rs.fundamental_weight(0));
  ModPtr u = irrep(rs, rs.fundamental_weight(0).scaled(Rat(2)));
  DiffOp dv = difference_operator(rs, v, u);
  DiffOp dvv = compose(dv, dv);
  LatticeWeight om = rs.fundamental_weight(0);
  REQUIRE(dvv.coeffs.size() == 3);
  CHECK(dvv.coeffs.count(om.scaled(Rat(2))) == 1);
  CHECK(dvv.coeffs.count(rs.zero()) == 1);
  CHECK(dvv.coeffs.count(om.scaled(Rat(-2))) == 1);
}

TEST_CASE("operators from tensor factors commute and split") {
  RootSystem rs(1);
  ModPtr v = irrep(rs, rs.fundamental_weight(0));
  ModPtr w = irrep(rs, rs.fundamental_weight(0).scaled(Rat(2)));
  ModPtr u = irrep(rs, rs.fundamental_weight(0).scaled(Rat(2)));

  VerificationReport r1 = verify_commutativity(rs, v, v, u);
  CHECK(r1.status == "pass");
  CHECK(r1.failures.empty());
  VerificationReport r2 = verify_commutativity(rs, v, w, u);
  CHECK(r2.status == "pass");
}
