#include "modspec.hpp"

#include <cctype>

#include "errors.hpp"

namespace dybe {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit((unsigned char)c)) return false;
  return true;
}

}  // namespace

int parse_algebra(const std::string& spec) {
  if (spec.size() < 2 || (spec[0] != 'A' && spec[0] != 'a') || !all_digits(spec.substr(1)))
    throw BadRequest("unrecognized algebra spec: \"" + spec + "\" (expected A1, A2, ...)");
  int r = std::stoi(spec.substr(1));
  if (r < 1) throw UnsupportedRank("algebra rank must be positive: " + spec);
  return r;
}

ModPtr parse_module(const RootSystem& rs, const std::string& spec) {
  std::string body = spec;
  size_t colon = body.find(':');
  if (colon != std::string::npos) {
    if (parse_algebra(body.substr(0, colon)) != rs.rank())
      throw BadRequest("module spec \"" + spec + "\" names a different algebra");
    body = body.substr(colon + 1);
  }
  if (body.size() < 4 || (body[0] != 'L' && body[0] != 'l') || body[1] != '(' || body.back() != ')')
    throw BadRequest("unrecognized module spec: \"" + spec + "\" (expected L(c1,...,cr))");

  std::vector<Rat> coords;
  std::string inner = body.substr(2, body.size() - 3);
  size_t pos = 0;
  while (pos <= inner.size()) {
    size_t comma = inner.find(',', pos);
    std::string tok = inner.substr(pos, comma == std::string::npos ? comma : comma - pos);
    if (!all_digits(tok))
      throw BadRequest("module spec \"" + spec + "\": coordinate \"" + tok +
                       "\" is not a nonnegative integer");
    coords.push_back(Rat(std::stol(tok)));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if ((int)coords.size() != rs.rank())
    throw BadRequest("module spec \"" + spec + "\" has " + std::to_string(coords.size()) +
                     " coordinates; algebra A" + std::to_string(rs.rank()) + " needs " +
                     std::to_string(rs.rank()));
  return irrep(rs, LatticeWeight(std::move(coords)));
}

std::vector<std::string> split_specs(const std::string& spec) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  if (out.empty()) throw BadRequest("empty module list");
  return out;
}

std::vector<ModPtr> parse_module_list(const RootSystem& rs, const std::string& spec) {
  std::vector<ModPtr> out;
  for (const std::string& s : split_specs(spec)) out.push_back(parse_module(rs, s));
  return out;
}

}  // namespace dybe
