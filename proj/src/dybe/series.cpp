#include "series.hpp"

#include "errors.hpp"

namespace dybe {

void ExpSeries::add_term(const LatticeWeight& xi, const RatFun& coeff) {
  if (coeff.is_zero()) return;
  if (rs_.height(xi) > order_) return;
  auto it = terms_.find(xi);
  if (it == terms_.end()) {
    terms_.emplace(xi, coeff);
  } else {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RatFun ExpSeries::coeff(const LatticeWeight& xi) const {
  auto it = terms_.find(xi);
  if (it == terms_.end()) return RatFun(rs_.rank());
  return it->second;
}

ExpSeries ExpSeries::truncated(const Rat& new_order) const {
  ExpSeries r(rs_, new_order, pref_);
  for (const auto& [xi, c] : terms_) r.add_term(xi, c);
  return r;
}

ExpSeries ExpSeries::exponent_shifted(const LatticeWeight& xi0) const {
  ExpSeries r(rs_, order_ + rs_.height(xi0), pref_);
  for (const auto& [xi, c] : terms_) r.add_term(xi + xi0, c);
  return r;
}

ExpSeries ExpSeries::coeff_subst(const std::vector<int>& signs, const std::vector<Rat>& shifts) const {
  ExpSeries r(rs_, order_, pref_);
  for (const auto& [xi, c] : terms_) r.add_term(xi, c.subst_affine(signs, shifts));
  return r;
}

ExpSeries ExpSeries::scaled(const RatFun& k) const {
  ExpSeries r(rs_, order_, pref_);
  for (const auto& [xi, c] : terms_) r.add_term(xi, c * k);
  return r;
}

ExpSeries operator+(const ExpSeries& a, const ExpSeries& b) {
  if (a.pref_ != b.pref_ && !a.is_zero() && !b.is_zero())
    throw Error("adding series with different prefactors");
  ExpSeries r(a.rs_, std::min(a.order_, b.order_), a.is_zero() ? b.pref_ : a.pref_);
  for (const auto& [xi, c] : a.terms_) r.add_term(xi, c);
  for (const auto& [xi, c] : b.terms_) r.add_term(xi, c);
  return r;
}

ExpSeries operator*(const ExpSeries& a, const ExpSeries& b) {
  if (a.pref_ != Prefactor::None && b.pref_ != Prefactor::None)
    throw BothPrefactored("product of two prefactored series");
  Prefactor pref = a.pref_ != Prefactor::None ? a.pref_ : b.pref_;
  ExpSeries r(a.rs_, std::min(a.order_, b.order_), pref);
  for (const auto& [xa, ca] : a.terms_)
    for (const auto& [xb, cb] : b.terms_) r.add_term(xa + xb, ca * cb);
  return r;
}

bool ExpSeries::equal_to_order(const ExpSeries& a, const ExpSeries& b, const Rat& bound) {
  if (a.pref_ != b.pref_ && !a.is_zero() && !b.is_zero()) return false;
  return a.truncated(bound).terms_ == b.truncated(bound).terms_;
}

ExpSeries weyl_denominator(const RootSystem& rs, const Rat& order) {
  ExpSeries s(rs, order);
  const auto& pos = rs.positive_roots();
  size_t n = pos.size();
  for (size_t mask = 0; mask < (size_t(1) << n); ++mask) {
    LatticeWeight xi = -rs.rho();
    int sgn = 1;
    for (size_t k = 0; k < n; ++k)
      if (mask & (size_t(1) << k)) {
        xi = xi + pos[k];
        sgn = -sgn;
      }
    s.add_term(xi, RatFun::from_rat(rs.rank(), Rat(sgn)));
  }
  return s;
}

}  // namespace dybe
