#pragma once
#include "diffop.hpp"
#include "series.hpp"

namespace dybe {

// The invariant pairing form of M against M*, as a matrix over basis pairs:
// B[a][b] = <,>( J_{M,M*}(lam) (m_a (x) m*_b) )
template <Scalar S>
Matrix<S> pair_form(const RootSystem& rs, ModPtr M, const Param<S>& lam) {
  ModPtr Ms = dual(M);
  Matrix<S> j = fusion_matrix<S>(rs, M, Ms, lam).m;
  const int d = M->dim();
  Matrix<S> b(d, d, zero_like(lam[0]));
  for (int a = 0; a < d; ++a)
    for (int bb = 0; bb < d; ++bb) {
      S acc = zero_like(lam[0]);
      for (int c = 0; c < d; ++c) acc += j.at(c * d + c, a * d + bb);
      b.at(a, bb) = acc;
    }
  return b;
}

// Endomorphism Q_W(lam) with  B(w_a, w*_b) = <Q w_a, w*_b>,  i.e. Q[b][a] = B[a][b].
template <Scalar S>
Matrix<S> q_matrix(const RootSystem& rs, ModPtr W, const Param<S>& lam) {
  Matrix<S> q = pair_form<S>(rs, W, lam).transposed();
  TensorSpace sp({W});
  if (!BlockMatrix<S>{sp, q}.weight_preserving())
    throw Error("Q matrix not weight preserving for " + W->name);
  return q;
}

template <Scalar S>
MatFamily<S> q_family(const RootSystem& rs, ModPtr W) {
  return [&rs, W](const Param<S>& p) { return q_matrix<S>(rs, W, p); };
}

// Four exact identities tying the pair form and Q to fusion and exchange:
//  (a) B_{U(x)W} o (J_{UW}(lam-h^(U*)-h^(W*)) (x) J_{W*U*}^{21}(lam))
//        = B_U(lam) . B_W(lam - h^(U*-index)) acting on [U,W,U*,W*]
//  (b) Q_{U(x)W}(lam) = (J_{W*U*}^{t1t2,21}(lam))^{-1}
//        (Q_U(lam) (x) Q_W(lam+h^(U))) J_{UW}(lam+h^(U)+h^(W))^{-1}
//  (c) Q_{U(x)W}(lam) = Q_{W(x)U}^{21}(lam)
//  (d) R_{U*W*}^{t1t2}(lam) = (Q_U(lam) (x) Q_W(lam+h^(U)))
//        R_{UW}(lam+h^(U)+h^(W)) (Q_U(lam+h^(W)) (x) Q_W(lam))^{-1}
template <Scalar S>
VerificationReport verify_q_identities(const RootSystem& rs, ModPtr U, ModPtr W,
                                       const Param<S>& lam, const std::string& var_prefix) {
  VerificationReport rep;
  rep.identity = "q-identities";
  const S zero = zero_like(lam[0]);
  ModPtr Us = dual(U), Ws = dual(W);
  const int dU = U->dim(), dW = W->dim();

  {  // (a): both sides are covectors on U (x) W (x) U* (x) W*
    TensorSpace full4({U, W, Us, Ws});
    Fusion<S> jwsus = fusion_matrix<S>(rs, Ws, Us, lam);
    Matrix<S> big =
        assemble_shifted<S>(full4, {0, 1}, fusion_family<S>(rs, U, W), {{2, -1}, {3, -1}},
                            lam, zero) *
        embed_legs(full4, {2, 3}, flip_legs(jwsus.space, jwsus.m, 0, 1));
    Matrix<S> buw = pair_form<S>(rs, tensor(U, W), lam);
    Matrix<S> bu = pair_form<S>(rs, U, lam);
    std::map<LatticeWeight, Matrix<S>> bw_cache;
    for (int x = 0; x < full4.dim(); ++x) {
      S lhs = zero;
      for (int y = 0; y < full4.dim(); ++y) {
        const S& v = big.at(y, x);
        if (ScalarTraits<S>::is_zero(v)) continue;
        std::vector<int> yi = full4.split(y);
        lhs += buw.at(yi[0] * dW + yi[1], yi[2] * dW + yi[3]) * v;
      }
      std::vector<int> xi = full4.split(x);
      const LatticeWeight& wus = Us->weights[xi[2]];
      auto it = bw_cache.find(wus);
      if (it == bw_cache.end())
        it = bw_cache.emplace(wus, pair_form<S>(rs, W, param_shifted(lam, wus, -1))).first;
      S rhs = bu.at(xi[0], xi[2]) * it->second.at(xi[1], xi[3]);
      if (!(lhs == rhs))
        rep.fail("pair-form[" + full4.label_of(x) + "]", ScalarTraits<S>::str(lhs, var_prefix),
                 ScalarTraits<S>::str(rhs, var_prefix));
    }
  }

  TensorSpace full2({U, W});
  {  // (b)
    Matrix<S> lhs = q_matrix<S>(rs, tensor(U, W), lam);
    Fusion<S> jws = fusion_matrix<S>(rs, Ws, Us, lam);
    Matrix<S> t = transpose_leg(jws.space, jws.m, 0);
    t = transpose_leg(jws.space, t, 1);
    TensorSpace spwu({W, U});
    Matrix<S> jt = flip_legs(spwu, t, 0, 1);  // now acts on [U, W]
    Matrix<S> mid = embed_legs(full2, {0}, q_matrix<S>(rs, U, lam)) *
                    assemble_shifted<S>(full2, {1}, q_family<S>(rs, W), {{0, 1}}, lam, zero);
    Matrix<S> jshift = assemble_shifted<S>(full2, {0, 1}, fusion_family<S>(rs, U, W),
                                           {{0, 1}, {1, 1}}, lam, zero);
    Matrix<S> rhs = inverse(jt) * mid * inverse(jshift);
    compare_entrywise(rep, full2, lhs, rhs, "q-tensor", var_prefix);
  }
  {  // (c)
    Matrix<S> lhs = q_matrix<S>(rs, tensor(U, W), lam);
    TensorSpace spwu({W, U});
    Matrix<S> rhs = flip_legs(spwu, q_matrix<S>(rs, tensor(W, U), lam), 0, 1);
    compare_entrywise(rep, full2, lhs, rhs, "q-flip", var_prefix);
  }
  {  // (d)
    Exchange<S> rss = exchange_matrix<S>(rs, Us, Ws, lam);
    Matrix<S> lhs = transpose_leg(rss.space, rss.m, 0);
    lhs = transpose_leg(rss.space, lhs, 1);  // acts on [U, W]
    Matrix<S> qpart = embed_legs(full2, {0}, q_matrix<S>(rs, U, lam)) *
                      assemble_shifted<S>(full2, {1}, q_family<S>(rs, W), {{0, 1}}, lam, zero);
    Matrix<S> rmid = assemble_shifted<S>(full2, {0, 1}, exchange_family<S>(rs, U, W),
                                         {{0, 1}, {1, 1}}, lam, zero);
    Matrix<S> qinv = inverse(
        assemble_shifted<S>(full2, {0}, q_family<S>(rs, U), {{1, 1}}, lam, zero) *
        embed_legs(full2, {1}, q_matrix<S>(rs, W, lam)));
    Matrix<S> rhs = qpart * rmid * qinv;
    compare_entrywise(rep, full2, lhs, rhs, "exchange-dual", var_prefix);
  }
  return rep;
}

// The intertwiner-transport relation behind the trace difference equation:
// for w in W[nu] and a slice vector z of M_{mu+nu},
//   P ((Phi_mu^V (x) 1) eta(w (x) z))
//     = (eta (x) 1 (x) 1) R_{WV}^{t2}(mu+nu) (w (x) Phi_{mu+nu}^V(z)),
// where eta(w (x) z) = Phi_{mu+nu}^w(z), Phi^V = sum_j Phi^{v_j} (x) v_j*,
// and the t2 transpose flips the V leg onto the V* leg.  Both sides are
// expanded over a common slice family M_{mu - wt(v_j2)} and compared
// componentwise on keys (j2, slice space, word, W index, V index).
template <Scalar S>
VerificationReport verify_eta_relation(const RootSystem& rs, ModPtr V, ModPtr W,
                                       const Param<S>& mu, long depth,
                                       const std::string& var_prefix) {
  VerificationReport rep;
  rep.identity = "eta";
  const S zero = zero_like(mu[0]);
  const int dV = V->dim(), dW = W->dim();

  long cone_v = 0, cone_w = 0;
  for (const LatticeWeight& x : V->distinct_weights())
    cone_v = std::max(cone_v, V->cone_depth_above(x));
  for (const LatticeWeight& x : W->distinct_weights())
    cone_w = std::max(cone_w, W->cone_depth_above(x));
  const long slice_depth = depth + cone_v + cone_w;

  // all slices share one highest-weight offset cache
  std::map<LatticeWeight, std::shared_ptr<VermaSlice<S>>> slices;
  auto slice_at = [&](const LatticeWeight& off) {
    auto it = slices.find(off);
    if (it == slices.end()) {
      auto sl = std::make_shared<VermaSlice<S>>(rs, param_shifted(mu, off), slice_depth);
      it = slices.emplace(off, std::move(sl)).first;
    }
    return it->second;
  };
  // Phi^{seed}_{mu+off}; the key is (module tag, seed index, source offset)
  std::map<std::tuple<int, int, LatticeWeight>, Intertwiner<S>> phis;
  auto phi_at = [&](int tag, const ModPtr& mod, int seed_idx, const LatticeWeight& off) {
    auto key = std::make_tuple(tag, seed_idx, off);
    auto it = phis.find(key);
    if (it == phis.end()) {
      std::vector<Rat> seed(mod->dim(), Rat(0));
      seed[seed_idx] = Rat(1);
      auto target = slice_at(off - mod->weights[seed_idx]);
      it = phis.emplace(key, solve_intertwiner(target, mod.get(), seed)).first;
    }
    return it;
  };

  std::map<LatticeWeight, Matrix<S>> rt2_cache;  // R_{WV}^{t2}(mu+nu) per nu
  TensorSpace spwv({W, V});

  using Key = std::array<int, 5>;  // (j2, space, word, W index, V index)
  for (int a = 0; a < dW; ++a) {
    const LatticeWeight nu = W->weights[a];
    auto in_slice = slice_at(nu);
    auto rt2_it = rt2_cache.find(nu);
    if (rt2_it == rt2_cache.end()) {
      Matrix<S> r = exchange_matrix<S>(rs, W, V, param_shifted(mu, nu)).m;
      rt2_it = rt2_cache.emplace(nu, transpose_leg(spwv, r, 1)).first;
    }
    const Matrix<S>& rt2 = rt2_it->second;

    for (int sin = 0; sin < in_slice->nspaces(); ++sin) {
      if (in_slice->height_of(sin) > depth) continue;
      for (int yin = 0; yin < in_slice->dim(sin); ++yin) {
        const Word& z = in_slice->word(sin, yin);
        std::map<Key, S> lhs, rhs;
        auto accumulate = [](std::map<Key, S>& m, const Key& k, const S& c) {
          auto [it, fresh] = m.emplace(k, c);
          if (!fresh) it->second += c;
        };

        {  // left side: eta then Phi^V then the flip
          auto pw = phi_at(1, W, a, nu);
          SliceVec<S> mid = apply_intertwiner(pw->second, z);
          for (const auto& [k1, c1] : mid.comps) {
            auto [s1, y1, aw] = k1;
            const Word& wrd = pw->second.slice->word(s1, y1);
            for (int j = 0; j < dV; ++j) {
              auto pv = phi_at(0, V, j, rs.zero());
              SliceVec<S> outv = apply_intertwiner(pv->second, wrd);
              for (const auto& [k2, c2] : outv.comps) {
                auto [s2, y2, bv] = k2;
                accumulate(lhs, {j, s2, y2, aw, bv}, c1 * c2);
              }
            }
          }
        }

        {  // right side: Phi^V at mu+nu, then R^{t2}, then eta
          for (int j = 0; j < dV; ++j) {
            auto pv = phi_at(0, V, j, nu);
            SliceVec<S> outv = apply_intertwiner(pv->second, z);
            const LatticeWeight off_j = nu - V->weights[j];
            for (int a2 = 0; a2 < dW; ++a2)
              for (int j2 = 0; j2 < dV; ++j2) {
                const S& rcoef = rt2.at(a2 * dV + j2, a * dV + j);
                if (ScalarTraits<S>::is_zero(rcoef)) continue;
                auto pw2 = phi_at(1, W, a2, off_j);
                for (const auto& [k2, c2] : outv.comps) {
                  auto [sj, yj, bv] = k2;
                  SliceVec<S> fin = apply_intertwiner(
                      pw2->second, pv->second.slice->word(sj, yj));
                  for (const auto& [k3, c3] : fin.comps) {
                    auto [s3, y3, aw] = k3;
                    accumulate(rhs, {j2, s3, y3, aw, bv}, rcoef * c2 * c3);
                  }
                }
              }
          }
        }

        auto describe = [&](const Key& k) {
          return "eta[w" + std::to_string(a) + ";z" + std::to_string(sin) + "." +
                 std::to_string(yin) + "->" + std::to_string(k[0]) + "," +
                 std::to_string(k[1]) + "." + std::to_string(k[2]) + "," +
                 std::to_string(k[3]) + "," + std::to_string(k[4]) + "]";
        };
        auto li = lhs.begin();
        auto ri = rhs.begin();
        while (li != lhs.end() || ri != rhs.end()) {
          if (ri == rhs.end() || (li != lhs.end() && li->first < ri->first)) {
            if (!ScalarTraits<S>::is_zero(li->second))
              rep.fail(describe(li->first), ScalarTraits<S>::str(li->second, var_prefix), "0");
            ++li;
          } else if (li == lhs.end() || ri->first < li->first) {
            if (!ScalarTraits<S>::is_zero(ri->second))
              rep.fail(describe(ri->first), "0", ScalarTraits<S>::str(ri->second, var_prefix));
            ++ri;
          } else {
            if (!(li->second == ri->second))
              rep.fail(describe(li->first), ScalarTraits<S>::str(li->second, var_prefix),
                       ScalarTraits<S>::str(ri->second, var_prefix));
            ++li;
            ++ri;
          }
        }
      }
    }
  }
  return rep;
}

// Trace of the zero-weight intertwiner family against e^lambda, as a matrix
// of exponential series over V[0] (x) V*[0].
struct TraceFunction {
  ModPtr mod;
  std::vector<int> v0;  // indices of V[0]
  Rat order;
  std::vector<std::vector<ExpSeries>> value;  // [V[0] index][V*[0] index]
};

TraceFunction trace_function(const RootSystem& rs, ModPtr V, long order);
TraceFunction weighted_trace(const RootSystem& rs, ModPtr V, long order);
VerificationReport verify_mr_equation(const RootSystem& rs, ModPtr V, ModPtr W, long order);

}  // namespace dybe
