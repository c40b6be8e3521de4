#pragma once
#include "intertwine.hpp"

namespace dybe {

template <Scalar S>
struct Exchange {
  TensorSpace space;  // [V, W] for R_{VW}
  Matrix<S> m;
};

// R_{VW}(lam) = J_{VW}(lam)^{-1} J_{WV}^{21}(lam)
template <Scalar S>
Exchange<S> exchange_matrix(const RootSystem& rs, ModPtr V, ModPtr W, const Param<S>& lam) {
  Fusion<S> jvw = fusion_matrix<S>(rs, V, W, lam);
  Fusion<S> jwv = fusion_matrix<S>(rs, W, V, lam);
  Matrix<S> r = inverse(jvw.m) * flip_legs(jwv.space, jwv.m, 0, 1);
  return {jvw.space, r};
}

template <Scalar S>
MatFamily<S> exchange_family(const RootSystem& rs, ModPtr V, ModPtr W) {
  return [&rs, V, W](const Param<S>& p) { return exchange_matrix<S>(rs, V, W, p).m; };
}

// R_{VU}(-lam - rho): substitute every coordinate x_i -> -x_i - 1 before the
// whole pipeline runs, which equals substituting in every entry afterwards.
template <Scalar S>
Param<S> reflected_param(const Param<S>& lam) {
  Param<S> q;
  q.reserve(lam.size());
  for (const S& x : lam) q.push_back(zero_like(x) - x - rat_like(x, Rat(1)));
  return q;
}

template <Scalar S>
Exchange<S> shifted_exchange(const RootSystem& rs, ModPtr V, ModPtr U, const Param<S>& lam) {
  return exchange_matrix<S>(rs, V, U, reflected_param(lam));
}

// R_{VW}(lam - h^(3)) R_{VU}(lam) R_{WU}(lam - h^(1))
//   = R_{WU}(lam) R_{VU}(lam - h^(2)) R_{VW}(lam)   on V (x) W (x) U
template <Scalar S>
VerificationReport verify_qdybe(const RootSystem& rs, ModPtr V, ModPtr W, ModPtr U,
                                const Param<S>& lam, const std::string& var_prefix) {
  VerificationReport rep;
  rep.identity = "qdybe";
  const S zero = zero_like(lam[0]);
  TensorSpace full({V, W, U});
  Matrix<S> rvw = exchange_matrix<S>(rs, V, W, lam).m;
  Matrix<S> rvu = exchange_matrix<S>(rs, V, U, lam).m;
  Matrix<S> rwu = exchange_matrix<S>(rs, W, U, lam).m;
  Matrix<S> lhs =
      assemble_shifted<S>(full, {0, 1}, exchange_family<S>(rs, V, W), {{2, -1}}, lam, zero) *
      embed_legs(full, {0, 2}, rvu) *
      assemble_shifted<S>(full, {1, 2}, exchange_family<S>(rs, W, U), {{0, -1}}, lam, zero);
  Matrix<S> rhs =
      embed_legs(full, {1, 2}, rwu) *
      assemble_shifted<S>(full, {0, 2}, exchange_family<S>(rs, V, U), {{1, -1}}, lam, zero) *
      embed_legs(full, {0, 1}, rvw);
  compare_entrywise(rep, full, lhs, rhs, "qdybe", var_prefix);
  return rep;
}

// the two identities coupling fusion and exchange on U (x) V (x) W:
//   J_{VW}(lam)^{-1} R_{U,V(x)W}(lam) J_{VW}(lam - h^(U)) = R_{UV}(lam - h^(W)) R_{UW}(lam)
//   J_{UV}(lam - h^(W))^{-1} R_{U(x)V,W}(lam) J_{UV}(lam) = R_{VW}(lam) R_{UW}(lam - h^(V))
template <Scalar S>
VerificationReport verify_fusion_exchange(const RootSystem& rs, ModPtr V, ModPtr W, ModPtr U,
                                          const Param<S>& lam, const std::string& var_prefix) {
  VerificationReport rep;
  rep.identity = "fusion-exchange";
  const S zero = zero_like(lam[0]);
  TensorSpace full({U, V, W});

  {
    Matrix<S> jvw = fusion_matrix<S>(rs, V, W, lam).m;
    Matrix<S> lhs = inverse(embed_legs(full, {1, 2}, jvw)) *
                    exchange_matrix<S>(rs, U, tensor(V, W), lam).m *
                    assemble_shifted<S>(full, {1, 2}, fusion_family<S>(rs, V, W), {{0, -1}},
                                        lam, zero);
    Matrix<S> rhs =
        assemble_shifted<S>(full, {0, 1}, exchange_family<S>(rs, U, V), {{2, -1}}, lam, zero) *
        embed_legs(full, {0, 2}, exchange_matrix<S>(rs, U, W, lam).m);
    compare_entrywise(rep, full, lhs, rhs, "fuse-right", var_prefix);
  }
  {
    Matrix<S> juv = fusion_matrix<S>(rs, U, V, lam).m;
    Matrix<S> lhs = inverse(assemble_shifted<S>(full, {0, 1}, fusion_family<S>(rs, U, V),
                                                {{2, -1}}, lam, zero)) *
                    exchange_matrix<S>(rs, tensor(U, V), W, lam).m *
                    embed_legs(full, {0, 1}, juv);
    Matrix<S> rhs =
        embed_legs(full, {1, 2}, exchange_matrix<S>(rs, V, W, lam).m) *
        assemble_shifted<S>(full, {0, 2}, exchange_family<S>(rs, U, W), {{1, -1}}, lam, zero);
    compare_entrywise(rep, full, lhs, rhs, "fuse-left", var_prefix);
  }
  return rep;
}

}  // namespace dybe
