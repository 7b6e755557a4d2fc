#pragma once

#include <cstddef>
#include <optional>

#include "gompf/matrix.hpp"
#include "gompf/rational.hpp"
#include "gompf/surgery.hpp"

// Framed links (L, L∥) recorded only through their linking data. This is
// enough to track framed cobordism classes and the p_1 of the combing built
// from a parallelization by the Pontrjagin construction.

namespace gompf {

struct FramedLinkData {
  /// lambda(i, i) = lk(K_i, K_i∥), lambda(i, j) = lk(K_i, K_j).
  RatMatrix lambda;
  /// Row i holds the meridian coefficients of [K_i] in the ambient
  /// presentation; cols() is the ambient component count.
  std::optional<IntMatrix> classes;

  std::size_t size() const noexcept { return lambda.rows(); }
};

struct FramedCobordismClass {
  MeridianClass homology;
  Rational total;

  friend bool operator==(const FramedCobordismClass&, const FramedCobordismClass&) = default;
};

/// Throws NotSymmetric / DimensionMismatch on malformed data.
void validate_framed(const FramedLinkData& f);

/// lk(L, L∥): the sum of every entry of lambda.
Rational total_self_linking(const FramedLinkData& f);

/// Sum of the component classes (zero vector when there are no components).
/// Throws MissingClasses if no classes are attached.
MeridianClass summed_class(const FramedLinkData& f);

/// Band sum of components i and j. The merged knot takes the smaller index and
/// the other slot is removed. Throws IndexError.
FramedLinkData band_sum(const FramedLinkData& f, std::size_t i, std::size_t j);

/// sign = +1 appends the (-1)-framed unknot of a negative Hopf pair (γ);
/// sign = -1 appends the (+1)-framed unknot (γ^{-1}). Split and null-homologous.
FramedLinkData add_hopf(const FramedLinkData& f, int sign);

/// Replaces the parallel of component i by one with `delta` extra meridians
/// (positive delta adds positive meridians).
FramedLinkData shift_parallel(const FramedLinkData& f, std::size_t i, const Integer& delta);

/// p_1(C(τ, L, L∥)) = p_1(τ) - 4 lk(L, L∥). The link must be rationally
/// null-homologous in `ambient` when classes are attached (NonTorsion
/// otherwise); without classes it is taken to sit in a ball.
Rational pontrjagin_p1(const Rational& p1_tau, const FramedLinkData& f,
                       const SurgeryPresentation& ambient = SurgeryPresentation::s3());

/// Framed cobordism in a Z-sphere or Z-ball: equal total self-linking. Throws
/// NotZSphere when a component carries a nonzero homology class.
bool framed_cobordant_zsphere(const FramedLinkData& a, const FramedLinkData& b);

/// (summed class reduced in coker B, total self-linking). Throws MissingClasses.
FramedCobordismClass cobordism_class(const FramedLinkData& f, const SurgeryPresentation& ambient);

}  // namespace gompf
