#pragma once
#include "exchange.hpp"

namespace dybe {

// Formal difference operator  sum_nu A_nu(lambda) T_nu  acting on functions
// valued in the zero weight space U[0]; T_nu shifts the argument by nu.
// Coefficients are End(U[0]) matrices over RatFun, keys sorted by weight.
struct DiffOp {
  RootSystem rs;
  std::vector<int> u0;  // indices of U[0] inside the defining module U
  std::map<LatticeWeight, Matrix<RatFun>> coeffs;

  friend bool operator==(const DiffOp& a, const DiffOp& b) {
    return a.u0 == b.u0 && a.coeffs == b.coeffs;
  }
};

// D_V: coefficient at nu is the partial trace over V[nu] of the
// corresponding diagonal block of the shifted exchange matrix R_{VU}(-lam-rho).
DiffOp difference_operator(const RootSystem& rs, ModPtr V, ModPtr U);

// (A o B) has coefficient at kappa:  sum_{mu+nu=kappa} A[mu](lam) B[nu](lam+mu)
DiffOp compose(const DiffOp& a, const DiffOp& b);

// D_{V (x) W} = D_V o D_W = D_W o D_V = D_{W (x) V}
VerificationReport verify_commutativity(const RootSystem& rs, ModPtr V, ModPtr W, ModPtr U);

}  // namespace dybe
