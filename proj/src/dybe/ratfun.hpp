#pragma once
#include <string>
#include <vector>

#include "poly.hpp"

namespace dybe {

// Rational function in canonical form: numerator and denominator coprime,
// denominator monic under graded-lex.  Canonical form makes operator== a
// structural comparison, which is what every verifier here relies on.
class RatFun {
 public:
  explicit RatFun(int nvars = 0)
      : num_(Poly(nvars)), den_(Poly::constant(nvars, Rat(1))) {}
  RatFun(Poly num, Poly den);

  static RatFun from_rat(int nvars, const Rat& c) {
    return RatFun(Poly::constant(nvars, c), Poly::constant(nvars, Rat(1)));
  }
  static RatFun variable(int nvars, int i) {
    return RatFun(Poly::variable(nvars, i), Poly::constant(nvars, Rat(1)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rat constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RatFun operator-() const;
  friend RatFun operator+(const RatFun& a, const RatFun& b);
  friend RatFun operator-(const RatFun& a, const RatFun& b);
  friend RatFun operator*(const RatFun& a, const RatFun& b);
  friend RatFun operator/(const RatFun& a, const RatFun& b);
  RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
  RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
  RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
  RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
  RatFun inv() const;

  friend bool operator==(const RatFun& a, const RatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // throws PoleAtPoint when the denominator vanishes at the point
  Rat eval(const std::vector<Rat>& point) const;
  RatFun shifted(const std::vector<Rat>& shifts) const;
  RatFun subst_affine(const std::vector<int>& signs, const std::vector<Rat>& shifts) const;

  std::string str(const std::string& var_prefix) const;

 private:
  Poly num_, den_;
  void canonicalize();
};

}  // namespace dybe
