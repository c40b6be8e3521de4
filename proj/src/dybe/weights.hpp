#pragma once
#include <map>
#include <vector>

#include "rat.hpp"

namespace dybe {

// An element of the weight lattice (tensored with Q), stored by its pairings
// with the simple coroots: c[i] = <xi, alpha_i^vee>.
struct LatticeWeight {
  std::vector<Rat> c;

  LatticeWeight() = default;
  explicit LatticeWeight(std::vector<Rat> coords) : c(std::move(coords)) {}

  size_t rank() const { return c.size(); }
  bool is_zero() const {
    for (const Rat& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  LatticeWeight operator+(const LatticeWeight& o) const;
  LatticeWeight operator-(const LatticeWeight& o) const;
  LatticeWeight operator-() const;
  LatticeWeight scaled(const Rat& k) const;

  friend bool operator==(const LatticeWeight& a, const LatticeWeight& b) { return a.c == b.c; }
  friend bool operator!=(const LatticeWeight& a, const LatticeWeight& b) { return a.c != b.c; }
  friend bool operator<(const LatticeWeight& a, const LatticeWeight& b);  // lexicographic

  std::string str() const;  // "(c1,c2)"
};

// Root datum for type A_r.  Ranks 1 and 2 are the exercised targets; the
// construction itself is rank-parametric.  Everything downstream asks this
// object for heights, cone membership and coroot pairings.
class RootSystem {
 public:
  explicit RootSystem(int rank);

  int rank() const { return rank_; }
  const std::vector<std::vector<Rat>>& cartan() const { return cartan_; }

  LatticeWeight zero() const { return LatticeWeight(std::vector<Rat>(rank_, Rat(0))); }
  LatticeWeight simple_root(int i) const;
  LatticeWeight fundamental_weight(int i) const;
  LatticeWeight rho() const;  // sum of fundamental weights
  const std::vector<LatticeWeight>& positive_roots() const { return positive_; }

  // coordinates of xi in the simple-root basis (inverse Cartan applied)
  std::vector<Rat> root_coords(const LatticeWeight& xi) const;
  Rat height(const LatticeWeight& xi) const;
  // xi = sum of simple roots with nonnegative integer multiplicities?
  bool in_root_cone(const LatticeWeight& xi) const;
  // <xi, alpha^vee> for an arbitrary root alpha (type A: alpha^vee matches alpha)
  Rat pair_coroot(const LatticeWeight& xi, const LatticeWeight& alpha) const;

  bool dominant_integral(const LatticeWeight& lam) const;
  Rat weyl_dim(const LatticeWeight& lam) const;

  // number of ways to write beta as a multiset of positive roots
  long kostant(const LatticeWeight& beta) const;

  // root-cone elements of height <= maxht, sorted by (height, coords)
  std::vector<LatticeWeight> cone_below(long maxht) const;

 private:
  int rank_;
  std::vector<std::vector<Rat>> cartan_;      // A[i][j] = <alpha_j, alpha_i^vee>
  std::vector<std::vector<Rat>> cartan_inv_;
  std::vector<LatticeWeight> positive_;
  mutable std::map<std::vector<long>, long> kostant_memo_;

  long kostant_rec(const std::vector<long>& t, size_t k) const;
};

}  // namespace dybe
