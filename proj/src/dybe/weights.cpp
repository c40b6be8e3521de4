#include "weights.hpp"

#include <algorithm>
#include <cassert>

#include "errors.hpp"

namespace dybe {

LatticeWeight LatticeWeight::operator+(const LatticeWeight& o) const {
  assert(c.size() == o.c.size());
  LatticeWeight r(*this);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] += o.c[i];
  return r;
}

LatticeWeight LatticeWeight::operator-(const LatticeWeight& o) const {
  assert(c.size() == o.c.size());
  LatticeWeight r(*this);
  for (size_t i = 0; i < c.size(); ++i) r.c[i] -= o.c[i];
  return r;
}

LatticeWeight LatticeWeight::operator-() const {
  LatticeWeight r(*this);
  for (Rat& x : r.c) x = -x;
  return r;
}

LatticeWeight LatticeWeight::scaled(const Rat& k) const {
  LatticeWeight r(*this);
  for (Rat& x : r.c) x *= k;
  return r;
}

bool operator<(const LatticeWeight& a, const LatticeWeight& b) {
  return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

std::string LatticeWeight::str() const {
  std::string s = "(";
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += c[i].str();
  }
  return s + ")";
}

RootSystem::RootSystem(int rank) : rank_(rank) {
  if (rank <= 0) throw UnsupportedRank("rank must be positive");
  cartan_.assign(rank, std::vector<Rat>(rank, Rat(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (i == j) cartan_[i][j] = Rat(2);
      else if (i == j + 1 || j == i + 1) cartan_[i][j] = Rat(-1);
    }
  // type A_r: (A^-1)_{ij} = min(i,j) * (r+1-max(i,j)) / (r+1), 1-based
  cartan_inv_.assign(rank, std::vector<Rat>(rank, Rat(0)));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      long mn = std::min(i, j) + 1, mx = std::max(i, j) + 1;
      cartan_inv_[i][j] = Rat(mn * (rank + 1 - mx), rank + 1);
    }
  // positive roots are alpha_i + ... + alpha_j, i <= j; listed by height
  for (int len = 0; len < rank; ++len)
    for (int i = 0; i + len < rank; ++i) {
      LatticeWeight a = simple_root(i);
      for (int k = i + 1; k <= i + len; ++k) a = a + simple_root(k);
      positive_.push_back(a);
    }
}

LatticeWeight RootSystem::simple_root(int i) const {
  assert(i >= 0 && i < rank_);
  std::vector<Rat> c(rank_);
  for (int k = 0; k < rank_; ++k) c[k] = cartan_[k][i];
  return LatticeWeight(std::move(c));
}

LatticeWeight RootSystem::fundamental_weight(int i) const {
  assert(i >= 0 && i < rank_);
  std::vector<Rat> c(rank_, Rat(0));
  c[i] = Rat(1);
  return LatticeWeight(std::move(c));
}

LatticeWeight RootSystem::rho() const {
  return LatticeWeight(std::vector<Rat>(rank_, Rat(1)));
}

std::vector<Rat> RootSystem::root_coords(const LatticeWeight& xi) const {
  assert((int)xi.rank() == rank_);
  std::vector<Rat> t(rank_, Rat(0));
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) t[i] += cartan_inv_[i][j] * xi.c[j];
  return t;
}

Rat RootSystem::height(const LatticeWeight& xi) const {
  Rat h(0);
  for (const Rat& t : root_coords(xi)) h += t;
  return h;
}

bool RootSystem::in_root_cone(const LatticeWeight& xi) const {
  for (const Rat& t : root_coords(xi))
    if (!t.is_integer() || t.sign() < 0) return false;
  return true;
}

Rat RootSystem::pair_coroot(const LatticeWeight& xi, const LatticeWeight& alpha) const {
  std::vector<Rat> t = root_coords(alpha);
  Rat r(0);
  for (int i = 0; i < rank_; ++i) r += t[i] * xi.c[i];
  return r;
}

bool RootSystem::dominant_integral(const LatticeWeight& lam) const {
  for (const Rat& x : lam.c)
    if (!x.is_integer() || x.sign() < 0) return false;
  return true;
}

Rat RootSystem::weyl_dim(const LatticeWeight& lam) const {
  LatticeWeight lr = lam + rho();
  Rat d(1);
  for (const LatticeWeight& a : positive_) d *= pair_coroot(lr, a) / pair_coroot(rho(), a);
  return d;
}

long RootSystem::kostant(const LatticeWeight& beta) const {
  if (!in_root_cone(beta)) return 0;
  std::vector<Rat> rc = root_coords(beta);
  std::vector<long> t(rank_);
  for (int i = 0; i < rank_; ++i) t[i] = rc[i].num().get_si();
  return kostant_rec(t, positive_.size());
}

long RootSystem::kostant_rec(const std::vector<long>& t, size_t k) const {
  bool zero = std::all_of(t.begin(), t.end(), [](long x) { return x == 0; });
  if (zero) return 1;
  if (k == 0) return 0;
  std::vector<long> key = t;
  key.push_back((long)k);
  auto it = kostant_memo_.find(key);
  if (it != kostant_memo_.end()) return it->second;
  // multiplicity of positive_[k-1] in the partition, then recurse
  std::vector<Rat> arc = root_coords(positive_[k - 1]);
  std::vector<long> ac(rank_);
  for (int i = 0; i < rank_; ++i) ac[i] = arc[i].num().get_si();
  long total = 0;
  std::vector<long> rem = t;
  for (;;) {
    total += kostant_rec(rem, k - 1);
    bool ok = true;
    for (int i = 0; i < rank_; ++i) {
      rem[i] -= ac[i];
      if (rem[i] < 0) ok = false;
    }
    if (!ok) break;
  }
  kostant_memo_[key] = total;
  return total;
}

std::vector<LatticeWeight> RootSystem::cone_below(long maxht) const {
  std::vector<LatticeWeight> out;
  std::vector<long> n(rank_, 0);
  // enumerate all simple-root multiplicity vectors with sum <= maxht
  auto rec = [&](auto&& self, int pos, long remaining) -> void {
    if (pos == rank_) {
      LatticeWeight xi = zero();
      for (int i = 0; i < rank_; ++i) xi = xi + simple_root(i).scaled(Rat(n[i]));
      out.push_back(xi);
      return;
    }
    for (long k = 0; k <= remaining; ++k) {
      n[pos] = k;
      self(self, pos + 1, remaining - k);
    }
    n[pos] = 0;
  };
  rec(rec, 0, maxht);
  std::stable_sort(out.begin(), out.end(), [this](const LatticeWeight& a, const LatticeWeight& b) {
    Rat ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

}  // namespace dybe
