#pragma once
#include <vector>

#include "scalar.hpp"
#include "weights.hpp"

namespace dybe {

// A dynamical parameter is just its vector of coroot values <lambda, alpha_i^vee>:
// RatFun coordinates x_i for symbolic runs, Rat samples for numeric ones.
// Shifts lambda + c*nu land in the same type, which is what lets one code
// path serve both modes.
template <Scalar S>
using Param = std::vector<S>;

inline Param<RatFun> symbolic_param(int rank) {
  Param<RatFun> p;
  for (int i = 0; i < rank; ++i) p.push_back(RatFun::variable(rank, i));
  return p;
}

template <Scalar S>
Param<S> param_shifted(const Param<S>& p, const LatticeWeight& nu, int sign = 1) {
  Param<S> q = p;
  for (size_t i = 0; i < q.size(); ++i) {
    Rat d = sign < 0 ? -nu.c[i] : nu.c[i];
    q[i] += rat_like(p[i], d);
  }
  return q;
}

// stable map key for caching matrices evaluated at shifted parameters
inline std::vector<Rat> shift_key(const LatticeWeight& nu) { return nu.c; }

}  // namespace dybe
