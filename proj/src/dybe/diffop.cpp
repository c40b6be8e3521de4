#include "diffop.hpp"

namespace dybe {

DiffOp difference_operator(const RootSystem& rs, ModPtr V, ModPtr U) {
  std::vector<int> u0 = U->weight_space(rs.zero());
  if (u0.empty())
    throw EmptyZeroWeightSpace("module " + U->name + " has no zero weight space");

  Param<RatFun> lam = symbolic_param(rs.rank());
  Matrix<RatFun> rbar = shifted_exchange<RatFun>(rs, V, U, lam).m;
  const int dU = U->dim(), n = (int)u0.size();
  const RatFun zero = zero_like(lam[0]);

  DiffOp d{rs, u0, {}};
  for (const LatticeWeight& nu : V->distinct_weights()) {
    Matrix<RatFun> a(n, n, zero);
    for (int j : V->weight_space(nu))
      for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
          a.at(p, q) += rbar.at(j * dU + u0[p], j * dU + u0[q]);
    if (!a.is_zero()) d.coeffs.emplace(nu, std::move(a));
  }
  return d;
}

DiffOp compose(const DiffOp& a, const DiffOp& b) {
  if (a.u0 != b.u0) throw BadRequest("composed operators target different zero weight spaces");
  DiffOp out{a.rs, a.u0, {}};
  for (const auto& [mu, am] : a.coeffs)
    for (const auto& [nu, bm] : b.coeffs) {
      Matrix<RatFun> shifted = bm;
      for (int r = 0; r < shifted.rows(); ++r)
        for (int c = 0; c < shifted.cols(); ++c)
          shifted.at(r, c) = shifted.at(r, c).shifted(mu.c);
      Matrix<RatFun> term = am * shifted;
      LatticeWeight kappa = mu + nu;
      auto it = out.coeffs.find(kappa);
      if (it == out.coeffs.end())
        out.coeffs.emplace(kappa, std::move(term));
      else
        it->second = it->second + term;
    }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = it->second.is_zero() ? out.coeffs.erase(it) : std::next(it);
  return out;
}

namespace {

void compare_diffops(VerificationReport& rep, const DiffOp& lhs, const DiffOp& rhs,
                     const std::string& block) {
  auto li = lhs.coeffs.begin();
  auto ri = rhs.coeffs.begin();
  while (li != lhs.coeffs.end() || ri != rhs.coeffs.end()) {
    if (ri == rhs.coeffs.end() || (li != lhs.coeffs.end() && li->first < ri->first)) {
      rep.fail(block + " shift " + li->first.str(), "present", "absent");
      ++li;
      continue;
    }
    if (li == lhs.coeffs.end() || ri->first < li->first) {
      rep.fail(block + " shift " + ri->first.str(), "absent", "present");
      ++ri;
      continue;
    }
    const Matrix<RatFun>&a = li->second, &b = ri->second;
    for (int r = 0; r < a.rows(); ++r)
      for (int c = 0; c < a.cols(); ++c)
        if (!(a.at(r, c) == b.at(r, c)))
          rep.fail(block + " shift " + li->first.str() + " [" + std::to_string(r) + "," +
                       std::to_string(c) + "]",
                   a.at(r, c).str("x"), b.at(r, c).str("x"));
    ++li;
    ++ri;
  }
}

}  // namespace

VerificationReport verify_commutativity(const RootSystem& rs, ModPtr V, ModPtr W, ModPtr U) {
  VerificationReport rep;
  rep.identity = "diffop-commute";
  rep.mode = "symbolic";
  DiffOp dv = difference_operator(rs, V, U);
  DiffOp dw = difference_operator(rs, W, U);
  DiffOp vw = compose(dv, dw);
  DiffOp wv = compose(dw, dv);
  DiffOp dvw = difference_operator(rs, tensor(V, W), U);
  DiffOp dwv = difference_operator(rs, tensor(W, V), U);
  compare_diffops(rep, vw, wv, "compose-order");
  compare_diffops(rep, vw, dvw, "compose-vs-joint");
  compare_diffops(rep, dvw, dwv, "joint-order");
  return rep;
}

}  // namespace dybe
