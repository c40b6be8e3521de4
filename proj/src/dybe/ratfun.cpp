#include "ratfun.hpp"

#include <cassert>

#include "errors.hpp"

namespace dybe {

RatFun::RatFun(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  assert(num_.nvars() == den_.nvars());
  if (den_.is_zero()) throw Error("rational function with zero denominator");
  canonicalize();
}

void RatFun::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.nvars(), Rat(1));
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (!(g.is_constant() && g.constant_value().is_one())) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  const Rat lc = den_.leading_coeff();
  if (!lc.is_one()) {
    num_ = num_.scaled(lc.inv());
    den_ = den_.scaled(lc.inv());
  }
}

RatFun RatFun::operator-() const {
  RatFun r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFun operator+(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator-(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFun operator*(const RatFun& a, const RatFun& b) {
  return RatFun(a.num_ * b.num_, a.den_ * b.den_);
}

RatFun operator/(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw Error("rational function division by zero");
  return RatFun(a.num_ * b.den_, a.den_ * b.num_);
}

RatFun RatFun::inv() const {
  if (is_zero()) throw Error("inverse of zero rational function");
  return RatFun(den_, num_);
}

Rat RatFun::eval(const std::vector<Rat>& point) const {
  Rat d = den_.eval(point);
  if (d.is_zero()) throw PoleAtPoint("denominator vanishes at evaluation point");
  return num_.eval(point) / d;
}

RatFun RatFun::shifted(const std::vector<Rat>& shifts) const {
  return RatFun(num_.shifted(shifts), den_.shifted(shifts));
}

RatFun RatFun::subst_affine(const std::vector<int>& signs, const std::vector<Rat>& shifts) const {
  return RatFun(num_.subst_affine(signs, shifts), den_.subst_affine(signs, shifts));
}

std::string RatFun::str(const std::string& var_prefix) const {
  if (den_.is_constant() && den_.constant_value().is_one()) return num_.str(var_prefix);
  std::string n = num_.str(var_prefix);
  if (num_.terms().size() > 1) n = "(" + n + ")";
  std::string d = den_.str(var_prefix);
  // parenthesize unless the denominator is a bare variable or constant
  bool bare = den_.terms().size() == 1 &&
              (den_.leading_mono().degree() == 0 ||
               (den_.leading_mono().degree() == 1 && den_.leading_coeff().is_one()));
  if (!bare) d = "(" + d + ")";
  return n + "/" + d;
}

}  // namespace dybe
