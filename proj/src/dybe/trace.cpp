#include "trace.hpp"

namespace dybe {

TraceFunction trace_function(const RootSystem& rs, ModPtr V, long order) {
  std::vector<int> v0 = V->weight_space(rs.zero());
  if (v0.empty())
    throw EmptyZeroWeightSpace("module " + V->name + " has no zero weight space");

  Param<RatFun> mu = symbolic_param(rs.rank());
  auto slice = std::make_shared<VermaSlice<RatFun>>(rs, mu,
                                                    order + V->cone_depth_above(rs.zero()));
  const int n = (int)v0.size();
  TraceFunction tf{V, v0, Rat(order), {}};
  tf.value.assign(n, std::vector<ExpSeries>(n, ExpSeries(rs, Rat(order), Prefactor::PlusMu)));
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[v0[i]] = i;

  for (int j = 0; j < n; ++j) {
    std::vector<Rat> seed(V->dim(), Rat(0));
    seed[v0[j]] = Rat(1);
    Intertwiner<RatFun> phi = solve_intertwiner(slice, V.get(), seed);
    for (int s = 0; s < slice->nspaces(); ++s) {
      if (Rat(slice->height_of(s)) > Rat(order)) continue;
      for (int y = 0; y < slice->dim(s); ++y) {
        SliceVec<RatFun> img = apply_intertwiner(phi, slice->word(s, y));
        for (const auto& [k, c] : img.comps) {
          auto [s2, y2, m] = k;
          if (s2 != s || y2 != y) continue;
          auto p = pos.find(m);
          if (p != pos.end()) tf.value[p->second][j].add_term(slice->beta(s), c);
        }
      }
    }
  }
  return tf;
}

TraceFunction weighted_trace(const RootSystem& rs, ModPtr V, long order) {
  TraceFunction psi = trace_function(rs, V, order);
  const int r = rs.rank(), n = (int)psi.v0.size();
  const Rat ford = Rat(order) + rs.height(rs.rho());

  // argument reflection mu -> -mu-rho: coefficients substitute m_i -> -m_i-1,
  // exponents pick up +rho, and the global exponential flips sign
  std::vector<int> signs(r, -1);
  std::vector<Rat> shifts(r, Rat(-1));
  std::vector<std::vector<ExpSeries>> sub(n, std::vector<ExpSeries>(n, ExpSeries(rs, ford)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      ExpSeries s = psi.value[i][j].coeff_subst(signs, shifts).exponent_shifted(rs.rho());
      s.set_prefactor(Prefactor::MinusMu);
      sub[i][j] = s * weyl_denominator(rs, ford);
    }

  Param<RatFun> mu = symbolic_param(r);
  Matrix<RatFun> q = q_matrix<RatFun>(rs, dual(V), reflected_param(mu));
  Matrix<RatFun> q0(n, n, zero_like(mu[0]));
  for (int p = 0; p < n; ++p)
    for (int c = 0; c < n; ++c) q0.at(p, c) = q.at(psi.v0[p], psi.v0[c]);
  Matrix<RatFun> qinv;
  try {
    qinv = inverse(q0);
  } catch (const SingularSystem&) {
    throw SingularQ("pairing endomorphism of " + V->name + "* is singular on the zero space");
  }

  // Products above are complete only up to the requested order: a coefficient
  // at height h needs trace terms at every height <= h, and those stop at
  // `order`.  Truncate so every reported term is exact.
  TraceFunction f{psi.mod, psi.v0, Rat(order), {}};
  f.value.assign(n, std::vector<ExpSeries>(n, ExpSeries(rs, Rat(order), Prefactor::MinusMu)));
  for (int i = 0; i < n; ++i)
    for (int jp = 0; jp < n; ++jp)
      for (int j = 0; j < n; ++j)
        f.value[i][jp] =
            f.value[i][jp] + sub[i][j].scaled(qinv.at(jp, j)).truncated(Rat(order));
  return f;
}

namespace {

void compare_series(VerificationReport& rep, const ExpSeries& lhs, const ExpSeries& rhs,
                    const Rat& bound, const std::string& where) {
  if (ExpSeries::equal_to_order(lhs, rhs, bound)) return;
  ExpSeries a = lhs.truncated(bound), b = rhs.truncated(bound);
  for (const auto& [xi, c] : a.terms()) {
    RatFun d = b.coeff(xi);
    if (!(c == d)) rep.fail(where + " exp " + xi.str(), c.str("m"), d.str("m"));
  }
  for (const auto& [xi, c] : b.terms())
    if (a.coeff(xi).is_zero() && !c.is_zero())
      rep.fail(where + " exp " + xi.str(), "0", c.str("m"));
}

}  // namespace

VerificationReport verify_mr_equation(const RootSystem& rs, ModPtr V, ModPtr W, long order) {
  VerificationReport rep;
  rep.identity = "mr";
  rep.mode = "symbolic";

  TraceFunction f = weighted_trace(rs, V, order);
  DiffOp d = difference_operator(rs, W, dual(V));
  const int n = (int)f.v0.size();

  Rat maxht(0);
  for (const LatticeWeight& nu : W->distinct_weights())
    maxht = std::max(maxht, rs.height(nu));
  const Rat bound = Rat(order) - maxht;

  std::vector<int> signs(rs.rank(), 1);
  std::vector<std::vector<ExpSeries>> lhs(
      n, std::vector<ExpSeries>(n, ExpSeries(rs, f.order - maxht, Prefactor::MinusMu)));
  for (const auto& [nu, a] : d.coeffs)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        ExpSeries shifted = f.value[i][j].coeff_subst(signs, nu.c).exponent_shifted(nu);
        for (int jp = 0; jp < n; ++jp) {
          const RatFun& c = a.at(jp, j);
          if (!c.is_zero()) lhs[i][jp] = lhs[i][jp] + shifted.scaled(c);
        }
      }

  ExpSeries chi = character(*W, -1, f.order);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      compare_series(rep, lhs[i][j], chi * f.value[i][j], bound,
                     "mr[" + std::to_string(i) + "," + std::to_string(j) + "]");
  return rep;
}

}  // namespace dybe
