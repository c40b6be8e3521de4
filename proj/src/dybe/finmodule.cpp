#include "finmodule.hpp"

#include <algorithm>

#include "errors.hpp"
#include "wordbasis.hpp"

namespace dybe {

std::vector<int> FinModule::weight_space(const LatticeWeight& nu) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i)
    if (weights[i] == nu) out.push_back(i);
  return out;
}

std::vector<LatticeWeight> FinModule::distinct_weights() const {
  std::vector<LatticeWeight> out;
  for (const auto& w : weights)
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  std::stable_sort(out.begin(), out.end(), [this](const LatticeWeight& a, const LatticeWeight& b) {
    Rat ha = rs.height(a), hb = rs.height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

long FinModule::cone_depth_above(const LatticeWeight& base) const {
  long d = 0;
  for (const auto& nu : weights) {
    LatticeWeight diff = nu - base;
    if (!rs.in_root_cone(diff)) continue;
    Rat h = rs.height(diff);
    d = std::max(d, h.num().get_si());
  }
  return d;
}

ModPtr irrep(const RootSystem& rs, const LatticeWeight& lam) {
  if (!rs.dominant_integral(lam)) throw NotDominant("highest weight " + lam.str());
  const int r = rs.rank();
  // depth bound: lam - w0(lam), with w0 reversing the Dynkin diagram
  LatticeWeight w0lam = lam;
  for (int i = 0; i < r; ++i) w0lam.c[i] = -lam.c[r - 1 - i];
  Rat maxht = rs.height(lam - w0lam);
  std::vector<Rat> hw(lam.c);
  WordSpaces<Rat> ws = build_word_spaces<Rat>(rs, hw, maxht.num().get_si(), false);

  auto m = std::make_shared<FinModule>(rs);
  m->name = "A" + std::to_string(r) + ":L(";
  for (int i = 0; i < r; ++i) m->name += (i ? "," : "") + lam.c[i].str();
  m->name += ")";

  std::vector<int> offset(ws.spaces.size(), 0);
  int total = 0;
  for (size_t s = 0; s < ws.spaces.size(); ++s) {
    offset[s] = total;
    total += ws.dim((int)s);
  }
  m->labels.resize(total);
  m->weights.resize(total, rs.zero());
  for (size_t s = 0; s < ws.spaces.size(); ++s) {
    const auto& sp = ws.spaces[s];
    for (int b = 0; b < ws.dim((int)s); ++b) {
      std::string lbl;
      for (uint8_t ch : sp.basis[b]) lbl += "f" + std::to_string(ch + 1) + ".";
      lbl += "v";
      m->labels[offset[s] + b] = lbl;
      m->weights[offset[s] + b] = lam - sp.beta;
    }
  }
  m->E.assign(r, Matrix<Rat>(total, total, Rat(0)));
  m->F.assign(r, Matrix<Rat>(total, total, Rat(0)));
  for (size_t s = 0; s < ws.spaces.size(); ++s) {
    const auto& sp = ws.spaces[s];
    for (int i = 0; i < r; ++i) {
      if (sp.down[i] < 0) continue;
      const int src = sp.down[i];
      // f_i: space(src) -> space(s); e_i: space(s) -> space(src)
      for (int b = 0; b < ws.dim(src); ++b)
        for (int k = 0; k < ws.dim((int)s); ++k)
          m->F[i].at(offset[s] + k, offset[src] + b) = sp.fmat[i].at(k, b);
      for (int k = 0; k < ws.dim((int)s); ++k)
        for (int t = 0; t < ws.dim(src); ++t)
          m->E[i].at(offset[src] + t, offset[s] + k) = sp.emat[i].at(t, k);
    }
  }

  // the construction must land exactly on the Weyl dimension
  Rat wdim = rs.weyl_dim(lam);
  if (Rat(total) != wdim)
    throw Error("irreducible module dimension " + std::to_string(total) +
                " does not match the Weyl dimension " + wdim.str());
  return m;
}

ModPtr tensor(const ModPtr& a, const ModPtr& b) {
  auto m = std::make_shared<FinModule>(a->rs);
  m->name = "tensor(" + a->name + "," + b->name + ")";
  m->factors = {a, b};
  const int da = a->dim(), db = b->dim(), r = m->rs.rank();
  m->labels.resize(da * db);
  m->weights.resize(da * db, m->rs.zero());
  for (int i = 0; i < da; ++i)
    for (int j = 0; j < db; ++j) {
      m->labels[i * db + j] = a->labels[i] + "|" + b->labels[j];
      m->weights[i * db + j] = a->weights[i] + b->weights[j];
    }
  m->E.assign(r, Matrix<Rat>(da * db, da * db, Rat(0)));
  m->F.assign(r, Matrix<Rat>(da * db, da * db, Rat(0)));
  for (int g = 0; g < r; ++g) {
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < db; ++j) {
        const int col = i * db + j;
        for (int i2 = 0; i2 < da; ++i2) {
          if (!a->E[g].at(i2, i).is_zero()) m->E[g].at(i2 * db + j, col) += a->E[g].at(i2, i);
          if (!a->F[g].at(i2, i).is_zero()) m->F[g].at(i2 * db + j, col) += a->F[g].at(i2, i);
        }
        for (int j2 = 0; j2 < db; ++j2) {
          if (!b->E[g].at(j2, j).is_zero()) m->E[g].at(i * db + j2, col) += b->E[g].at(j2, j);
          if (!b->F[g].at(j2, j).is_zero()) m->F[g].at(i * db + j2, col) += b->F[g].at(j2, j);
        }
      }
  }
  return m;
}

ModPtr dual(const ModPtr& a) {
  auto m = std::make_shared<FinModule>(a->rs);
  m->name = "dual(" + a->name + ")";
  m->dual_of = a;
  const int d = a->dim(), r = m->rs.rank();
  m->labels.resize(d);
  m->weights.resize(d, m->rs.zero());
  for (int i = 0; i < d; ++i) {
    m->labels[i] = a->labels[i] + "*";
    m->weights[i] = -a->weights[i];
  }
  // (x phi)(v) = -phi(x v):  matrices go to minus transpose
  m->E.assign(r, Matrix<Rat>(d, d, Rat(0)));
  m->F.assign(r, Matrix<Rat>(d, d, Rat(0)));
  for (int g = 0; g < r; ++g)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        m->E[g].at(i, j) = -a->E[g].at(j, i);
        m->F[g].at(i, j) = -a->F[g].at(j, i);
      }
  return m;
}

ModPtr trivial_module(const RootSystem& rs) { return irrep(rs, rs.zero()); }

ExpSeries character(const FinModule& w, int sign, const Rat& order) {
  ExpSeries s(w.rs, order);
  const RatFun one = RatFun::from_rat(w.rs.rank(), Rat(1));
  for (const auto& nu : w.weights) s.add_term(sign < 0 ? nu : -nu, one);
  return s;
}

}  // namespace dybe
