#pragma once
#include <map>

#include "ratfun.hpp"
#include "weights.hpp"

namespace dybe {

// Global exponential-in-mu prefactor of a series.  At most one factor of a
// product may carry one.
enum class Prefactor { None, PlusMu, MinusMu };

// Truncated formal sum  [prefactor] * sum_xi c_xi(mu) exp(-<lambda,xi>).
// `order` is the height bound: terms with height(xi) > order are dropped on
// insertion, and products truncate to the smaller operand order.
class ExpSeries {
 public:
  ExpSeries(RootSystem rs, Rat order, Prefactor pref = Prefactor::None)
      : rs_(std::move(rs)), order_(std::move(order)), pref_(pref) {}

  const RootSystem& root_system() const { return rs_; }
  const Rat& order() const { return order_; }
  Prefactor prefactor() const { return pref_; }
  void set_prefactor(Prefactor p) { pref_ = p; }
  const std::map<LatticeWeight, RatFun>& terms() const { return terms_; }

  void add_term(const LatticeWeight& xi, const RatFun& coeff);
  RatFun coeff(const LatticeWeight& xi) const;
  bool is_zero() const { return terms_.empty(); }

  ExpSeries truncated(const Rat& new_order) const;
  // add xi0 to every exponent; the order bound moves with the terms
  ExpSeries exponent_shifted(const LatticeWeight& xi0) const;
  // apply an affine substitution to every coefficient
  ExpSeries coeff_subst(const std::vector<int>& signs, const std::vector<Rat>& shifts) const;
  ExpSeries scaled(const RatFun& k) const;

  friend ExpSeries operator+(const ExpSeries& a, const ExpSeries& b);
  friend ExpSeries operator*(const ExpSeries& a, const ExpSeries& b);

  // strict structural equality: order, prefactor and term map all agree
  friend bool operator==(const ExpSeries& a, const ExpSeries& b) {
    return a.order_ == b.order_ && (a.pref_ == b.pref_ || a.is_zero() || b.is_zero()) &&
           a.terms_ == b.terms_;
  }

  // equality of the truncations to a common bound
  static bool equal_to_order(const ExpSeries& a, const ExpSeries& b, const Rat& bound);

 private:
  RootSystem rs_;
  Rat order_;
  Prefactor pref_;
  std::map<LatticeWeight, RatFun> terms_;
};

// Truncation of  exp(<lambda,rho>) * prod_{alpha>0} (1 - exp(-<lambda,alpha>)):
// signed terms at exponents -rho + (sum of a subset of positive roots).
ExpSeries weyl_denominator(const RootSystem& rs, const Rat& order);

}  // namespace dybe
