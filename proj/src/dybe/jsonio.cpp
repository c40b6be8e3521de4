#include "jsonio.hpp"

namespace dybe {

Json weight_json(const LatticeWeight& w) {
  Json a = Json::array();
  for (const Rat& c : w.c) a.push_back(c.str());
  return a;
}

Json plain_matrix_json(const Matrix<RatFun>& m, const std::string& var_prefix) {
  Json entries = Json::array();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (!m.at(r, c).is_zero())
        entries.push_back(
            Json::array({std::to_string(r), std::to_string(c), m.at(r, c).str(var_prefix)}));
  Json names = Json::array();
  names.push_back(std::to_string(m.rows()));
  return Json{{"domain", names}, {"codomain", names}, {"entries", entries}};
}

Json series_json(const ExpSeries& s, const std::string& var_prefix) {
  const char* pref = "none";
  if (s.prefactor() == Prefactor::PlusMu) pref = "exp(<lambda,mu>)";
  if (s.prefactor() == Prefactor::MinusMu) pref = "exp(-<lambda,mu>)";
  Json terms = Json::array();
  for (const auto& [xi, c] : s.terms())
    terms.push_back(Json{{"exponent", weight_json(xi)}, {"coeff", c.str(var_prefix)}});
  return Json{{"prefactor", pref}, {"order", s.order().str()}, {"terms", terms}};
}

Json diffop_json(const DiffOp& d, const std::string& var_prefix) {
  Json shifts = Json::array();
  for (const auto& [nu, a] : d.coeffs)
    shifts.push_back(Json{{"nu", weight_json(nu)}, {"matrix", plain_matrix_json(a, var_prefix)}});
  return Json{{"shifts", shifts}};
}

Json trace_json(const TraceFunction& f) {
  Json entries = Json::array();
  for (size_t i = 0; i < f.value.size(); ++i)
    for (size_t j = 0; j < f.value[i].size(); ++j)
      entries.push_back(Json::array(
          {std::to_string(i), std::to_string(j), series_json(f.value[i][j], "m")}));
  Json basis = Json::array();
  for (int b : f.v0) basis.push_back(f.mod->labels[b]);
  return Json{{"module", f.mod->name},
              {"zero_weight_basis", basis},
              {"order", f.order.str()},
              {"entries", entries}};
}

Json report_json(const VerificationReport& rep) {
  Json fails = Json::array();
  for (const FailItem& f : rep.failures)
    fails.push_back(Json{{"where", f.where}, {"lhs", f.lhs}, {"rhs", f.rhs}});
  Json j{{"identity", rep.identity},
         {"operands", rep.operands},
         {"mode", rep.mode},
         {"status", rep.status},
         {"failures", fails}};
  if (!rep.note.empty()) j["note"] = rep.note;
  if (!rep.sample.empty()) j["sample"] = rep.sample;
  if (rep.seed) j["seed"] = *rep.seed;
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace dybe
