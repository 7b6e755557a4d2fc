#pragma once

#include "gompf/rational.hpp"
#include "gompf/surgery.hpp"

// Combings of a surgered manifold M = ∂W_L. A combing is recorded by the
// first Chern class coefficients c of an almost-complex structure on W_L
// (a characteristic vector, c_i ≡ B_ii mod 2) together with an explicit
// offset j along the π_3(S^2) = Z orbit.

namespace gompf {

struct CombingSpec {
  SurgeryPresentation presentation;
  IntVector c;
  Integer gamma_offset = 0;

  friend bool operator==(const CombingSpec&, const CombingSpec&) = default;
};

struct EulerClassInfo {
  MeridianClass class_vector;
  bool is_torsion = false;
  bool is_zero = false;
};

struct P1Value {
  Rational value;
  friend bool operator==(const P1Value&, const P1Value&) = default;
};

/// Throws DimensionMismatch on a length error and NotCharacteristic naming the
/// first index with c_i ≢ B_ii (mod 2).
void validate_combing(const SurgeryPresentation& p, const IntVector& c);

EulerClassInfo euler_class(const SurgeryPresentation& p, const IntVector& c);

/// Gompf's invariant of the combing JN on M = ∂W:
///   θ_G = c^T B^{-1} c - 2 χ(W) - 3 σ(W),   χ(W) = n + 1, σ(W) = σ(B).
/// c^T B^{-1} c means c^T x for any rational solution of B x = c. Throws
/// NonTorsion when there is none.
Rational theta_g(const SurgeryPresentation& p, const IntVector& c);

/// p_1 = θ_G(c) + 4 j.
P1Value p1(const CombingSpec& x);

CombingSpec gamma(const CombingSpec& x, const Integer& t);

/// Same Spin^c structure iff c - c' ∈ 2 B Z^n.
bool spin_c_equal(const SurgeryPresentation& p, const IntVector& c, const IntVector& c_other);

/// Decides homotopy of two torsion combings on one presentation. Non-torsion
/// input throws NonTorsion: there is no computable relative γ-offset there.
bool combing_equal(const CombingSpec& x, const CombingSpec& y);

/// gcd of |c^T z| over the integer kernel of B; the γ-orbit of the combing is
/// Z / (this) Z, and 0 means the action is free.
Integer gamma_orbit_modulus(const SurgeryPresentation& p, const IntVector& c);

/// Absolute Q-grading attached to the combing: (2 + p_1) / 4.
Rational hf_grading(const CombingSpec& x);

/// c_ref = B u where B u ≡ diag(B) (mod 2); the Euler class vanishes, so the
/// combing extends to a parallelization.
CombingSpec reference_parallelization(const SurgeryPresentation& p);

/// p_1(τ) - dim H_1(M; Z/2) - β_1(M) is even for the reference
/// parallelization τ. Always expected to return true.
bool parity_check(const SurgeryPresentation& p);

struct ReparamDelta {
  Integer delta_p1;  // 2 deg(g)
  Rational lk;       // -deg(g) / 2
};

/// Change of p_1 when a parallelization τ is replaced by τ∘ψ(g) for
/// g: (M, ∂M) -> (SO(3), Id) of the given degree.
ReparamDelta reparam_delta(const Integer& degree);

/// Adds a split unknot with framing sign = ±1 and c-coefficient c0 (odd), then
/// shifts the γ-offset so p_1 is preserved. Throws EvenCoefficient, BadSign.
CombingSpec stabilize(const CombingSpec& x, int sign, const Integer& c0);

}  // namespace gompf
