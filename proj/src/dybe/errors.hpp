#pragma once
#include <stdexcept>
#include <string>

namespace dybe {

// Base for every error the library raises on purpose.  The C API maps these
// to status codes; anything else escaping is a bug.
struct Error : std::runtime_error {
  explicit Error(const std::string& m) : std::runtime_error(m) {}
};

// evaluation point hits a denominator zero
struct PoleAtPoint : Error { using Error::Error; };
// numeric highest weight failed a genericity requirement (after resampling)
struct NonGenericWeight : Error { using Error::Error; };
// linear system for an intertwiner lost rank at the given weight
struct SingularSystem : Error { using Error::Error; };
// a vector reached deeper into a Verma slice than the slice was built for
struct DepthExceeded : Error { using Error::Error; };
// multiplying two exponential series that both carry a prefactor
struct BothPrefactored : Error { using Error::Error; };
// root systems need a positive rank
struct UnsupportedRank : Error { using Error::Error; };
// irreducible modules need dominant integral highest weights
struct NotDominant : Error { using Error::Error; };
// intertwiner tops and similar inputs must be weight-homogeneous
struct NonHomogeneousVector : Error { using Error::Error; };
// difference/trace constructions need a nonzero zero-weight space
struct EmptyZeroWeightSpace : Error { using Error::Error; };
// the Q-matrix block that must be inverted is singular
struct SingularQ : Error { using Error::Error; };
// malformed CLI/API request
struct BadRequest : Error { using Error::Error; };

}  // namespace dybe
