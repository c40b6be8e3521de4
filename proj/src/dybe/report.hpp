#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "blockmatrix.hpp"

namespace dybe {

struct FailItem {
  std::string where;  // identity block / matrix entry that disagreed
  std::string lhs;
  std::string rhs;
};

// outcome of one identity check; `seconds` is for progress text only and is
// never serialized (serialized reports must be bit-stable across runs)
struct VerificationReport {
  std::string identity;
  std::string operands;
  std::string mode;  // "symbolic" | "numeric"
  std::string status = "pass";  // "pass" | "fail" | "skipped"
  std::string note;
  std::vector<FailItem> failures;
  std::vector<std::string> sample;  // sampled weight coordinates, numeric mode
  std::optional<std::uint64_t> seed;
  double seconds = 0.0;

  bool passed() const { return status != "fail"; }
  void fail(std::string where, std::string lhs, std::string rhs) {
    status = "fail";
    if (failures.size() < 32)
      failures.push_back({std::move(where), std::move(lhs), std::move(rhs)});
  }
};

template <Scalar S>
void compare_entrywise(VerificationReport& rep, const TensorSpace& sp, const Matrix<S>& lhs,
                       const Matrix<S>& rhs, const std::string& block,
                       const std::string& var_prefix) {
  for (int r = 0; r < lhs.rows(); ++r)
    for (int c = 0; c < lhs.cols(); ++c)
      if (!(lhs.at(r, c) == rhs.at(r, c)))
        rep.fail(block + "[" + sp.label_of(r) + "," + sp.label_of(c) + "]",
                 ScalarTraits<S>::str(lhs.at(r, c), var_prefix),
                 ScalarTraits<S>::str(rhs.at(r, c), var_prefix));
}

}  // namespace dybe
