#pragma once
#include <memory>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "series.hpp"
#include "weights.hpp"

namespace dybe {

struct FinModule;
using ModPtr = std::shared_ptr<const FinModule>;

// Finite-dimensional weight-graded module with exact generator actions.
// The h-action is implicit in the weight grading.
struct FinModule {
  explicit FinModule(RootSystem r) : rs(std::move(r)) {}

  RootSystem rs;
  std::string name;
  std::vector<std::string> labels;
  std::vector<LatticeWeight> weights;
  std::vector<Matrix<Rat>> E, F;  // one dim x dim matrix per simple index

  // tensor products remember their legs so block matrices can split indices;
  // duals remember what they dualize so transposes can identify bases
  std::vector<ModPtr> factors;
  ModPtr dual_of;

  int dim() const { return (int)labels.size(); }
  int rank() const { return rs.rank(); }

  std::vector<int> weight_space(const LatticeWeight& nu) const;
  std::vector<LatticeWeight> distinct_weights() const;  // sorted by (height, lex)
  // largest height of (nu - base) over weights nu with nu - base in the cone
  long cone_depth_above(const LatticeWeight& base) const;
};

// Irreducible highest-weight module L(lam) via the pairing-radical quotient.
ModPtr irrep(const RootSystem& rs, const LatticeWeight& lam);
ModPtr tensor(const ModPtr& a, const ModPtr& b);
ModPtr dual(const ModPtr& a);
ModPtr trivial_module(const RootSystem& rs);

// chi_W as a finite series: sign '-' stores exponent xi = nu (for chi(e^-lambda)),
// sign '+' stores xi = -nu
ExpSeries character(const FinModule& w, int sign, const Rat& order);

}  // namespace dybe
