#pragma once
#include <cstdint>

#include "param.hpp"
#include "rat.hpp"

namespace dybe {

// Deterministic splittable generator for genericity sampling (splitmix64).
// Cheap, stateless across runs: the same seed always yields the same stream,
// which is what makes numeric verification runs reproducible.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  uint64_t below(uint64_t n) { return next() % n; }

  // fork an independent stream (per-verification seeding)
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  uint64_t state_;
};

// One generic coordinate: numerator in [-10^6, 10^6], denominator in [1, 10^3].
inline Rat sample_coord(SplitMix64& g) {
  long num = (long)g.below(2000001) - 1000000;
  long den = (long)g.below(1000) + 1;
  return Rat(num, den);
}

inline std::vector<Rat> sample_point(SplitMix64& g, int rank) {
  std::vector<Rat> p;
  p.reserve(rank);
  for (int i = 0; i < rank; ++i) p.push_back(sample_coord(g));
  return p;
}

// Callers retry a failed genericity-sensitive computation this many times
// before giving up (NonGenericWeight propagates to the caller).
constexpr int kMaxResamples = 8;

}  // namespace dybe
