#pragma once

#include <cstdint>
#include <random>

#include "gompf/combing.hpp"
#include "gompf/framed.hpp"
#include "gompf/matrix.hpp"
#include "gompf/rational.hpp"

// Seeded random inputs for property checks. Only the raw 64-bit stream of
// std::mt19937_64 is used, so a given seed yields the same cases on every
// platform (the std distributions are implementation-defined).

namespace gompf {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (engine_() & 1U) != 0; }

 private:
  std::mt19937_64 engine_;
};

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound);
IntMatrix random_symmetric(Rng& rng, std::size_t n, long bound);

/// Symmetric matrix of rank < n (when n > 0), as M^T diag(...) M with one zero
/// in the diagonal.
IntMatrix random_singular_symmetric(Rng& rng, std::size_t n, long bound);

/// Product of random elementary integer operations; |det| = 1.
IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps);

IntVector random_vector(Rng& rng, std::size_t n, long bound);

/// A characteristic vector with torsion Euler class: c_ref + 2 t + 2 B w where
/// t = B s / gcd(B s) is a torsion (usually nonzero) class.
IntVector random_torsion_characteristic(Rng& rng, const SurgeryPresentation& p, long bound);

/// Symmetric rational linking data with small numerators and denominators.
FramedLinkData random_framed(Rng& rng, std::size_t components, std::size_t ambient_dim, long bound);

}  // namespace gompf
