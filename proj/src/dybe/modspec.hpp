#pragma once
#include <string>
#include <vector>

#include "finmodule.hpp"

namespace dybe {

// User-facing names for algebras and modules, as they appear on the command
// line and in JSON requests: algebra "A1", "A2", ...; module "L(1)",
// "L(1,0)", optionally qualified "A2:L(1,0)".

// "A<r>" -> r; throws BadRequest on anything else
int parse_algebra(const std::string& spec);

// "L(c1,...,cr)" with an optional "A<r>:" prefix that must agree with rs;
// coordinates must be nonnegative integers (dominant integral weight)
ModPtr parse_module(const RootSystem& rs, const std::string& spec);

// split "L(1,0),L(0,1)" at top-level commas only; commas inside parentheses
// bind to the enclosing weight
std::vector<std::string> split_specs(const std::string& spec);

// split_specs + parse_module on every piece
std::vector<ModPtr> parse_module_list(const RootSystem& rs, const std::string& spec);

}  // namespace dybe
