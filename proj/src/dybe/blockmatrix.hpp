#pragma once
#include <functional>
#include <map>

#include "finmodule.hpp"
#include "param.hpp"

namespace dybe {

// Ordered tensor product of module legs.  Flat indices nest left to right
// (first leg most significant), so a two-leg space [U, tensor(W,V)] and the
// three-leg space [U, W, V] index identically.
class TensorSpace {
 public:
  TensorSpace() = default;
  explicit TensorSpace(std::vector<ModPtr> legs) : legs_(std::move(legs)) {
    dim_ = 1;
    for (const auto& m : legs_) dim_ *= m->dim();
  }

  int legs() const { return (int)legs_.size(); }
  const ModPtr& leg(int k) const { return legs_[k]; }
  const std::vector<ModPtr>& leg_list() const { return legs_; }
  int dim() const { return dim_; }

  std::vector<int> split(int flat) const {
    std::vector<int> idx(legs_.size());
    for (int k = (int)legs_.size() - 1; k >= 0; --k) {
      idx[k] = flat % legs_[k]->dim();
      flat /= legs_[k]->dim();
    }
    return idx;
  }
  int join(const std::vector<int>& idx) const {
    int flat = 0;
    for (size_t k = 0; k < legs_.size(); ++k) flat = flat * legs_[k]->dim() + idx[k];
    return flat;
  }

  LatticeWeight weight_of(int flat) const {
    std::vector<int> idx = split(flat);
    LatticeWeight w = legs_[0]->rs.zero();
    for (size_t k = 0; k < legs_.size(); ++k) w = w + legs_[k]->weights[idx[k]];
    return w;
  }

  std::string label_of(int flat) const {
    std::vector<int> idx = split(flat);
    std::string s;
    for (size_t k = 0; k < legs_.size(); ++k) s += (k ? "|" : "") + std::to_string(idx[k]);
    return s;
  }

 private:
  std::vector<ModPtr> legs_;
  int dim_ = 1;
};

// Weight-preserving operator on a tensor space, stored dense.
template <Scalar S>
struct BlockMatrix {
  TensorSpace domain;    // == codomain for everything verified here
  Matrix<S> m;

  bool weight_preserving() const {
    for (int r = 0; r < m.rows(); ++r)
      for (int c = 0; c < m.cols(); ++c)
        if (!ScalarTraits<S>::is_zero(m.at(r, c)) &&
            !(domain.weight_of(r) == domain.weight_of(c)))
          return false;
    return true;
  }
};

// A lambda-parametric matrix constructor on a fixed operand space, e.g.
// p -> exchange_matrix(V, W, p).m
template <Scalar S>
using MatFamily = std::function<Matrix<S>(const Param<S>&)>;

// lift an operator acting on a subset of legs to the full space (identity
// on the remaining legs); op_legs need not be contiguous
template <Scalar S>
Matrix<S> embed_legs(const TensorSpace& full, const std::vector<int>& op_legs,
                     const Matrix<S>& op) {
  Matrix<S> out(full.dim(), full.dim(), op.zero());
  std::vector<int> op_dims;
  for (int k : op_legs) op_dims.push_back(full.leg(k)->dim());
  auto op_flat = [&](const std::vector<int>& idx) {
    int f = 0;
    for (size_t t = 0; t < op_legs.size(); ++t) f = f * op_dims[t] + idx[op_legs[t]];
    return f;
  };
  for (int c = 0; c < full.dim(); ++c) {
    std::vector<int> cidx = full.split(c);
    int oc = op_flat(cidx);
    for (int orow = 0; orow < op.rows(); ++orow) {
      const S& v = op.at(orow, oc);
      if (ScalarTraits<S>::is_zero(v)) continue;
      std::vector<int> ridx = cidx;
      int rem = orow;
      for (int t = (int)op_legs.size() - 1; t >= 0; --t) {
        ridx[op_legs[t]] = rem % op_dims[t];
        rem /= op_dims[t];
      }
      out.at(full.join(ridx), c) += v;
    }
  }
  return out;
}

// Evaluate a shifted matrix expression  F(lambda - h^(k) - ...) blockwise:
// group the columns of the full space by the total weight carried on the
// shift legs, evaluate the family at the shifted parameter once per group,
// and embed.  Positive `sign` in a shift means lambda + h^(k).
struct LegShift {
  int leg;
  int sign;  // -1 for lambda - h^(leg), +1 for lambda + h^(leg)
};

template <Scalar S>
Matrix<S> assemble_shifted(const TensorSpace& full, const std::vector<int>& op_legs,
                           const MatFamily<S>& family, const std::vector<LegShift>& shifts,
                           const Param<S>& lam, const S& zero) {
  Matrix<S> out(full.dim(), full.dim(), zero);
  std::vector<int> op_dims;
  for (int k : op_legs) op_dims.push_back(full.leg(k)->dim());
  std::map<std::vector<Rat>, Matrix<S>> cache;
  for (int c = 0; c < full.dim(); ++c) {
    std::vector<int> cidx = full.split(c);
    LatticeWeight nu = full.leg(0)->rs.zero();
    for (const LegShift& sh : shifts) {
      LatticeWeight w = full.leg(sh.leg)->weights[cidx[sh.leg]];
      nu = sh.sign < 0 ? nu - w : nu + w;
    }
    auto it = cache.find(shift_key(nu));
    if (it == cache.end()) {
      Param<S> p = param_shifted(lam, nu);
      it = cache.emplace(shift_key(nu), family(p)).first;
    }
    const Matrix<S>& op = it->second;
    int oc = 0;
    for (size_t t = 0; t < op_legs.size(); ++t) oc = oc * op_dims[t] + cidx[op_legs[t]];
    for (int orow = 0; orow < op.rows(); ++orow) {
      const S& v = op.at(orow, oc);
      if (ScalarTraits<S>::is_zero(v)) continue;
      std::vector<int> ridx = cidx;
      int rem = orow;
      for (int t = (int)op_legs.size() - 1; t >= 0; --t) {
        ridx[op_legs[t]] = rem % op_dims[t];
        rem /= op_dims[t];
      }
      out.at(full.join(ridx), c) += v;
    }
  }
  return out;
}

// conjugate by the permutation of two legs (the "21" operation when the
// space has exactly two legs)
template <Scalar S>
Matrix<S> flip_legs(const TensorSpace& from, const Matrix<S>& m, int leg_a, int leg_b) {
  // from is the space m acts on; the result acts on the space with the two
  // legs exchanged, whose flat indices are computed by permuting
  std::vector<ModPtr> legs = from.leg_list();
  std::swap(legs[leg_a], legs[leg_b]);
  TensorSpace to(std::move(legs));
  Matrix<S> out(to.dim(), to.dim(), m.zero());
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<int> ridx = from.split(r);
    std::swap(ridx[leg_a], ridx[leg_b]);
    int rr = to.join(ridx);
    for (int c = 0; c < m.cols(); ++c) {
      if (ScalarTraits<S>::is_zero(m.at(r, c))) continue;
      std::vector<int> cidx = from.split(c);
      std::swap(cidx[leg_a], cidx[leg_b]);
      out.at(rr, to.join(cidx)) = m.at(r, c);
    }
  }
  return out;
}

// transpose on one leg with respect to the evaluation pairing: the leg's
// module is replaced by its dual (or un-dualized), and the row/column index
// on that leg swaps sides
template <Scalar S>
Matrix<S> transpose_leg(const TensorSpace& from, const Matrix<S>& m, int leg) {
  Matrix<S> out(m.rows(), m.cols(), m.zero());
  for (int r = 0; r < m.rows(); ++r) {
    std::vector<int> ridx = from.split(r);
    for (int c = 0; c < m.cols(); ++c) {
      const S& v = m.at(r, c);
      if (ScalarTraits<S>::is_zero(v)) continue;
      std::vector<int> cidx = from.split(c);
      std::swap(ridx[leg], cidx[leg]);
      out.at(from.join(ridx), from.join(cidx)) = v;
      std::swap(ridx[leg], cidx[leg]);
    }
  }
  return out;
}

}  // namespace dybe
