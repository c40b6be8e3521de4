#pragma once
#include <json.hpp>
#include <string>

#include "blockmatrix.hpp"
#include "diffop.hpp"
#include "report.hpp"
#include "series.hpp"
#include "trace.hpp"

namespace dybe {

using Json = nlohmann::json;

// All serializers are deterministic: nlohmann::json keeps object keys in a
// sorted map, arrays keep insertion order, and every traversal below walks a
// fixed index range or a std::map.  No floats, no timing, no addresses.

// {domain, codomain, entries: [[row-label, col-label, value-string]]};
// zero entries are omitted, scan order is row-major
template <Scalar S>
Json matrix_json(const TensorSpace& sp, const Matrix<S>& m, const std::string& var_prefix) {
  Json names = Json::array();
  for (const auto& leg : sp.leg_list()) names.push_back(leg->name);
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!ScalarTraits<S>::is_zero(m.at(r, c)))
        entries.push_back(Json::array(
            {sp.label_of(r), sp.label_of(c), ScalarTraits<S>::str(m.at(r, c), var_prefix)}));
  return Json{{"domain", names}, {"codomain", names}, {"entries", entries}};
}

// positional labels "0".."n-1" for matrices without an attached tensor space
Json plain_matrix_json(const Matrix<RatFun>& m, const std::string& var_prefix);

// {prefactor, order, terms: [{exponent, coeff}]} sorted by exponent
Json series_json(const ExpSeries& s, const std::string& var_prefix);

// {shifts: [{nu, matrix}]} sorted by shift weight
Json diffop_json(const DiffOp& d, const std::string& var_prefix);

// {module, zero_weight_basis, order, entries: [[i, j, series]]}
Json trace_json(const TraceFunction& f);

Json report_json(const VerificationReport& rep);

// canonical weight serialization: array of coordinate strings
Json weight_json(const LatticeWeight& w);

std::string dump_json(const Json& j);  // 2-space indent plus trailing newline

}  // namespace dybe
