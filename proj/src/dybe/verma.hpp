#pragma once
#include <array>
#include <memory>

#include "finmodule.hpp"
#include "param.hpp"
#include "wordbasis.hpp"

namespace dybe {

// Verma module truncated at depth D: the weight spaces M_lam[lam - beta]
// for beta of height <= D, with exact f_i / e_i action tables.  The highest
// weight may be symbolic (RatFun coordinates) or a numeric sample.
template <Scalar S>
class VermaSlice {
 public:
  VermaSlice(const RootSystem& rs, Param<S> highest, long depth)
      : depth_(depth), ws_(build_word_spaces<S>(rs, std::move(highest), depth, true)) {}

  const RootSystem& rs() const { return ws_.rs; }
  const Param<S>& highest() const { return ws_.hw; }
  long depth() const { return depth_; }

  int nspaces() const { return (int)ws_.spaces.size(); }
  const LatticeWeight& beta(int s) const { return ws_.spaces[s].beta; }
  int dim(int s) const { return (int)ws_.spaces[s].basis.size(); }
  const Word& word(int s, int b) const { return ws_.spaces[s].basis[b]; }
  int find(const LatticeWeight& beta) const { return ws_.find(beta); }
  long height_of(int s) const {
    Rat h = ws_.rs.height(ws_.spaces[s].beta);
    return h.num().get_si();
  }

  // id of the space at beta + alpha_i; DepthExceeded past the truncation
  int up(int s, int i) const {
    LatticeWeight b = ws_.spaces[s].beta + ws_.rs.simple_root(i);
    int t = ws_.find(b);
    if (t < 0) throw DepthExceeded("f-action leaves the depth-" + std::to_string(depth_) +
                                   " slice at " + b.str());
    return t;
  }
  // id of the space at beta - alpha_i, or -1 (the action of e_i is then zero)
  int down(int s, int i) const { return ws_.spaces[s].down[i]; }

  // action matrices: fmat(s,i): space(beta-alpha_i) -> space(s),
  // emat(s,i): space(s) -> space(beta-alpha_i)
  const Matrix<S>& fmat(int s, int i) const { return ws_.spaces[s].fmat[i]; }
  const Matrix<S>& emat(int s, int i) const { return ws_.spaces[s].emat[i]; }

  // h-eigenvalue <lam - beta, alpha_i^vee> on space s
  S hval(int s, int i) const {
    return ws_.hw[i] - rat_like(ws_.hw[i], ws_.spaces[s].beta.c[i]);
  }

 private:
  long depth_;
  WordSpaces<S> ws_;
};

// Vector in (Verma slice) tensor (one FinModule leg); mod_dim = 1 gives a
// plain slice vector.  Keys: (space id, basis index, module index).
template <Scalar S>
struct SliceVec {
  std::map<std::array<int, 3>, S> comps;

  void add(int s, int b, int v, const S& c) {
    if (ScalarTraits<S>::is_zero(c)) return;
    std::array<int, 3> k{s, b, v};
    auto it = comps.find(k);
    if (it == comps.end()) {
      comps.emplace(k, c);
    } else {
      it->second += c;
      if (ScalarTraits<S>::is_zero(it->second)) comps.erase(it);
    }
  }
  bool is_zero() const { return comps.empty(); }
};

// f_i acting on slice (tensor) module-leg vectors by the Leibniz rule
template <Scalar S>
SliceVec<S> slicevec_apply_f(const VermaSlice<S>& slice, const FinModule* mod, int i,
                             const SliceVec<S>& v) {
  SliceVec<S> out;
  for (const auto& [k, c] : v.comps) {
    auto [s, b, m] = k;
    int t = slice.up(s, i);
    const Matrix<S>& f = slice.fmat(t, i);
    for (int row = 0; row < f.rows(); ++row)
      out.add(t, row, m, f.at(row, b) * c);
    if (mod) {
      const Matrix<Rat>& fm = mod->F[i];
      for (int row = 0; row < fm.rows(); ++row) {
        const Rat& e = fm.at(row, m);
        if (!e.is_zero()) out.add(s, b, row, c * rat_like(c, e));
      }
    }
  }
  return out;
}

// e_i by the Leibniz rule (needed for checking the defining equations)
template <Scalar S>
SliceVec<S> slicevec_apply_e(const VermaSlice<S>& slice, const FinModule* mod, int i,
                             const SliceVec<S>& v) {
  SliceVec<S> out;
  for (const auto& [k, c] : v.comps) {
    auto [s, b, m] = k;
    int t = slice.down(s, i);
    if (t >= 0) {
      const Matrix<S>& e = slice.emat(s, i);
      for (int row = 0; row < e.rows(); ++row)
        out.add(t, row, m, e.at(row, b) * c);
    }
    if (mod) {
      const Matrix<Rat>& em = mod->E[i];
      for (int row = 0; row < em.rows(); ++row) {
        const Rat& x = em.at(row, m);
        if (!x.is_zero()) out.add(s, b, row, c * rat_like(c, x));
      }
    }
  }
  return out;
}

// the module-leg vector sitting over the highest-weight word
template <Scalar S>
std::vector<S> expectation(const SliceVec<S>& v, int mod_dim, const S& zero) {
  std::vector<S> out(mod_dim, zero);
  for (const auto& [k, c] : v.comps) {
    auto [s, b, m] = k;
    if (s == 0) out[m] += c;
  }
  return out;
}

}  // namespace dybe
