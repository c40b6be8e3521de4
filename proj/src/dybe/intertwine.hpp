#pragma once
#include <memory>

#include "blockmatrix.hpp"
#include "finmodule.hpp"
#include "report.hpp"
#include "verma.hpp"

namespace dybe {

// Intertwiner M_lam -> M_mu (x) V determined by its top module-leg vector v:
// payload[s].at(y, m) is the V-coordinate m of the component over basis word y
// of slice space s.  Payload weights climb: the component over M_mu[mu-beta]
// lies in V[wt(v)+beta], so spaces with an empty target weight space are
// omitted (their payload is exactly zero).
template <Scalar S>
struct Intertwiner {
  const FinModule* mod = nullptr;
  LatticeWeight top_weight;
  std::shared_ptr<VermaSlice<S>> slice;  // the target slice M_mu
  long payload_depth = 0;
  std::map<int, Matrix<S>> payload;
};

// Solves the highest-weight conditions level by level.  For each slice space
// at -beta the unknown payload column satisfies, for every simple index i and
// basis word z at -(beta - alpha_i):
//   sum_y  (e_i y)_z * u_{beta,y}  =  - e_i^V u_{beta-alpha_i, z}
// The stacked left-hand sides have full column rank for generic highest
// weight (no singular vectors below the top of a generic Verma module), so
// linear_solve either produces the unique solution or flags a bad sample.
template <Scalar S>
Intertwiner<S> solve_intertwiner(std::shared_ptr<VermaSlice<S>> slice, const FinModule* mod,
                                 const std::vector<Rat>& top) {
  const RootSystem& rs = slice->rs();
  if ((int)top.size() != mod->dim()) throw BadRequest("top vector has wrong length");
  Intertwiner<S> phi;
  phi.mod = mod;
  phi.slice = slice;

  bool seen = false;
  for (int j = 0; j < mod->dim(); ++j) {
    if (top[j].is_zero()) continue;
    if (!seen) {
      phi.top_weight = mod->weights[j];
      seen = true;
    } else if (!(mod->weights[j] == phi.top_weight)) {
      throw NonHomogeneousVector("intertwiner seed mixes weights " + phi.top_weight.str() +
                                 " and " + mod->weights[j].str());
    }
  }
  if (!seen) throw BadRequest("intertwiner seed vector is zero");
  phi.payload_depth = mod->cone_depth_above(phi.top_weight);
  if (slice->depth() < phi.payload_depth)
    throw BadRequest("slice depth " + std::to_string(slice->depth()) +
                     " too shallow for payload depth " + std::to_string(phi.payload_depth));

  const S zero = zero_like(slice->highest()[0]);
  const int dmod = mod->dim();

  {
    Matrix<S> p0(1, dmod, zero);
    for (int j = 0; j < dmod; ++j) p0.at(0, j) = rat_like(zero, top[j]);
    phi.payload.emplace(0, std::move(p0));
  }

  for (int s = 1; s < slice->nspaces(); ++s) {
    if (slice->height_of(s) > phi.payload_depth) continue;
    const LatticeWeight& beta = slice->beta(s);
    if (mod->weight_space(phi.top_weight + beta).empty()) continue;

    int nrows = 0;
    for (int i = 0; i < rs.rank(); ++i)
      if (slice->down(s, i) >= 0) nrows += slice->dim(slice->down(s, i));
    Matrix<S> A(nrows, slice->dim(s), zero);
    Matrix<S> B(nrows, dmod, zero);
    int row = 0;
    for (int i = 0; i < rs.rank(); ++i) {
      int g = slice->down(s, i);
      if (g < 0) continue;
      const Matrix<S>& em = slice->emat(s, i);
      for (int z = 0; z < slice->dim(g); ++z, ++row) {
        for (int y = 0; y < slice->dim(s); ++y) A.at(row, y) = em.at(z, y);
        auto it = phi.payload.find(g);
        if (it == phi.payload.end()) continue;
        const Matrix<Rat>& emod = mod->E[i];
        for (int m = 0; m < dmod; ++m) {
          S acc = zero;
          for (int mm = 0; mm < dmod; ++mm) {
            const Rat& c = emod.at(m, mm);
            if (!c.is_zero()) acc += it->second.at(z, mm) * rat_like(zero, c);
          }
          B.at(row, m) = zero - acc;
        }
      }
    }
    phi.payload.emplace(s, linear_solve(A, B));
  }
  return phi;
}

template <Scalar S>
Intertwiner<S> solve_intertwiner(const RootSystem& rs, const Param<S>& lam,
                                 const FinModule* mod, const std::vector<Rat>& top) {
  if ((int)top.size() != mod->dim()) throw BadRequest("top vector has wrong length");
  int lead = -1;
  for (int j = 0; j < mod->dim() && lead < 0; ++j)
    if (!top[j].is_zero()) lead = j;
  if (lead < 0) throw BadRequest("intertwiner seed vector is zero");
  const LatticeWeight& wt = mod->weights[lead];
  auto slice = std::make_shared<VermaSlice<S>>(rs, param_shifted(lam, wt, -1),
                                               mod->cone_depth_above(wt));
  return solve_intertwiner(slice, mod, top);
}

// Phi applied to the descendant word.x_lam of the source module; the result
// lives in (target slice) tensor mod.  The slice must be deep enough to hold
// payload_depth + |word| levels.
template <Scalar S>
SliceVec<S> apply_intertwiner(const Intertwiner<S>& phi, const Word& word) {
  SliceVec<S> v;
  for (const auto& [s, p] : phi.payload)
    for (int y = 0; y < p.rows(); ++y)
      for (int m = 0; m < p.cols(); ++m) v.add(s, y, m, p.at(y, m));
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    v = slicevec_apply_f(*phi.slice, phi.mod, (int)*it, v);
  return v;
}

template <Scalar S>
struct Fusion {
  TensorSpace space;  // [W, V] for the operator J_{WV}
  Matrix<S> m;
};

// J_{WV}(lam): column at w_a (x) v_b is the expectation of
// (Phi^{w_a} (x) 1) Phi^{v_b} (x_lam).  Unit triangular: the W-leg strictly
// descends off the diagonal while the V-leg ascends by the same amount.
template <Scalar S>
Fusion<S> fusion_matrix(const RootSystem& rs, ModPtr W, ModPtr V, const Param<S>& lam) {
  TensorSpace sp({W, V});
  const S zero = zero_like(lam[0]);
  const int dW = W->dim(), dV = V->dim();
  Matrix<S> out(dW * dV, dW * dV, zero);

  std::map<LatticeWeight, std::shared_ptr<VermaSlice<S>>> slice1_cache;
  std::map<LatticeWeight, std::shared_ptr<VermaSlice<S>>> slice2_cache;
  std::map<std::pair<int, LatticeWeight>, Intertwiner<S>> phi2_cache;

  for (int b = 0; b < dV; ++b) {
    const LatticeWeight wtv = V->weights[b];
    const long d1 = V->cone_depth_above(wtv);
    auto s1it = slice1_cache.find(wtv);
    if (s1it == slice1_cache.end()) {
      auto sl = std::make_shared<VermaSlice<S>>(rs, param_shifted(lam, wtv, -1), d1);
      s1it = slice1_cache.emplace(wtv, std::move(sl)).first;
    }
    std::vector<Rat> seed(dV, Rat(0));
    seed[b] = Rat(1);
    Intertwiner<S> phi1 = solve_intertwiner(s1it->second, V.get(), seed);

    for (int a = 0; a < dW; ++a) {
      const LatticeWeight wtw = W->weights[a];
      const long d2 = W->cone_depth_above(wtw) + d1;
      const LatticeWeight tot = wtv + wtw;
      auto s2it = slice2_cache.find(tot);
      if (s2it == slice2_cache.end() || s2it->second->depth() < d2) {
        auto sl = std::make_shared<VermaSlice<S>>(rs, param_shifted(lam, tot, -1), d2);
        s2it = slice2_cache.insert_or_assign(tot, std::move(sl)).first;
      }
      auto p2key = std::make_pair(a, wtv);
      auto p2it = phi2_cache.find(p2key);
      if (p2it == phi2_cache.end() || p2it->second.slice != s2it->second) {
        std::vector<Rat> seedw(dW, Rat(0));
        seedw[a] = Rat(1);
        p2it = phi2_cache.insert_or_assign(p2key,
                                           solve_intertwiner(s2it->second, W.get(), seedw))
                   .first;
      }

      const int col = a * dV + b;
      for (const auto& [s1, p1] : phi1.payload) {
        for (int y1 = 0; y1 < p1.rows(); ++y1) {
          SliceVec<S> img = apply_intertwiner(p2it->second, s1it->second->word(s1, y1));
          std::vector<S> wvec = expectation(img, dW, zero);
          for (int m1 = 0; m1 < p1.cols(); ++m1) {
            const S& c1 = p1.at(y1, m1);
            if (ScalarTraits<S>::is_zero(c1)) continue;
            for (int a2 = 0; a2 < dW; ++a2)
              if (!ScalarTraits<S>::is_zero(wvec[a2]))
                out.at(a2 * dV + m1, col) += wvec[a2] * c1;
          }
        }
      }

      // unit-triangularity postcondition
      const S one = rat_like(zero, Rat(1));
      for (int r = 0; r < dW * dV; ++r) {
        const S& e = out.at(r, col);
        if (ScalarTraits<S>::is_zero(e)) continue;
        if (r == col) {
          if (!(e == one)) throw Error("fusion: diagonal entry not 1 at " + sp.label_of(col));
          continue;
        }
        LatticeWeight drop = wtw - W->weights[r / dV];
        if (!rs.in_root_cone(drop) || rs.height(drop).is_zero() ||
            !(W->weights[r / dV] + V->weights[r % dV] == wtw + wtv))
          throw Error("fusion: triangularity violated at [" + sp.label_of(r) + "," +
                      sp.label_of(col) + "]");
      }
    }
  }
  if (!BlockMatrix<S>{sp, out}.weight_preserving())
    throw Error("fusion: result not weight preserving");
  return {sp, out};
}

// shifted-argument fusion on legs (a,b) of `full`, third argument tells which
// legs shift the weight
template <Scalar S>
MatFamily<S> fusion_family(const RootSystem& rs, ModPtr W, ModPtr V) {
  return [&rs, W, V](const Param<S>& p) { return fusion_matrix<S>(rs, W, V, p).m; };
}

// J_{U,W (x) V}(lam) (1 (x) J_{WV}(lam))  =  (J_{U (x) W,V}(lam)) (J_{UW}(lam - h^(3)))
template <Scalar S>
VerificationReport verify_cocycle(const RootSystem& rs, ModPtr U, ModPtr W, ModPtr V,
                                  const Param<S>& lam, const std::string& var_prefix) {
  VerificationReport rep;
  rep.identity = "cocycle";
  const S zero = zero_like(lam[0]);
  TensorSpace full({U, W, V});
  Matrix<S> lhs = fusion_matrix<S>(rs, U, tensor(W, V), lam).m *
                  embed_legs(full, {1, 2}, fusion_matrix<S>(rs, W, V, lam).m);
  Matrix<S> rhs = fusion_matrix<S>(rs, tensor(U, W), V, lam).m *
                  assemble_shifted<S>(full, {0, 1}, fusion_family<S>(rs, U, W),
                                      {{2, -1}}, lam, zero);
  compare_entrywise(rep, full, lhs, rhs, "cocycle", var_prefix);
  return rep;
}

}  // namespace dybe
