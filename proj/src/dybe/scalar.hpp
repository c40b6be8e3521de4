#pragma once
#include <concepts>
#include <string>
#include <vector>

#include "ratfun.hpp"

namespace dybe {

// The whole pipeline is generic over the ground field: Rat for numeric runs,
// RatFun for symbolic ones.  These traits supply the few operations that
// differ between the two.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rat> {
  static Rat from_rat(const Rat& r) { return r; }
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& r) { return r.is_zero(); }
  static Rat inv(const Rat& r) { return r.inv(); }
  static std::string str(const Rat& r, const std::string&) { return r.str(); }
};

// RatFun scalars need a fixed variable count; operations never mix counts.
template <>
struct ScalarTraits<RatFun> {
  static bool is_zero(const RatFun& r) { return r.is_zero(); }
  static RatFun inv(const RatFun& r) { return r.inv(); }
  static std::string str(const RatFun& r, const std::string& prefix) { return r.str(prefix); }
};

template <class S>
concept Scalar = std::same_as<S, Rat> || std::same_as<S, RatFun>;

template <Scalar S>
S scalar_from_rat(int nvars, const Rat& r) {
  if constexpr (std::same_as<S, Rat>) {
    (void)nvars;
    return r;
  } else {
    return RatFun::from_rat(nvars, r);
  }
}

}  // namespace dybe
