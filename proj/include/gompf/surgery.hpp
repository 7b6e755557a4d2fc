#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gompf/linalg.hpp"
#include "gompf/matrix.hpp"
#include "gompf/mod_class.hpp"
#include "gompf/rational.hpp"

namespace gompf {

/// Integral surgery on an n-component framed link in S^3, recorded by its
/// symmetric linking matrix: B_ii is the framing of K_i, B_ij = lk(K_i, K_j).
/// n = 0 presents S^3.
class SurgeryPresentation {
 public:
  SurgeryPresentation() = default;
  /// Throws DomainError(NotSymmetric) unless b is square and symmetric.
  explicit SurgeryPresentation(IntMatrix b);

  static SurgeryPresentation s3() { return SurgeryPresentation(); }

  const IntMatrix& linking_matrix() const noexcept { return b_; }
  std::size_t size() const noexcept { return b_.rows(); }

  friend bool operator==(const SurgeryPresentation&, const SurgeryPresentation&) = default;

 private:
  IntMatrix b_;
};

/// Coefficients of sum v_i m_i in the meridian generators of H_1(M; Z).
struct MeridianClass {
  IntVector v;
  friend bool operator==(const MeridianClass&, const MeridianClass&) = default;
};

/// H_1(M; Z) = coker B.
struct HomologySummary {
  IntVector invariant_factors;  // the factors > 1
  std::size_t betti_1 = 0;
  std::size_t dim_h1_mod2 = 0;
  Integer torsion_order = 1;
  std::vector<IntVector> kernel_basis;
};

HomologySummary homology_summary(const SurgeryPresentation& p);

/// lk_M(sum v_i m_i, sum w_j m_j) = -v^T B^{-1} w, evaluated as -w^T x with
/// B x = v. Both classes must be torsion (rational column space of B);
/// throws DomainError(NonTorsion) otherwise.
Rational meridian_pairing(const SurgeryPresentation& p, const MeridianClass& v,
                          const MeridianClass& w);

/// Torsion linking form: self-pairing of v reduced mod Z.
ModClass linking_form(const SurgeryPresentation& p, const MeridianClass& v);

/// One representative per element of Torsion(H_1), with its linking form
/// value. Representatives come from SNF coordinates in mixed radix (last factor
/// fastest), so the order is deterministic. Throws CapExceeded when the torsion
/// order is larger than cap.
std::vector<std::pair<MeridianClass, ModClass>> enumerate_torsion(const SurgeryPresentation& p,
                                                                  std::size_t cap);

/// True iff v lies in the rational column space of B.
bool is_torsion_class(const SurgeryPresentation& p, const MeridianClass& v);

/// True iff v lies in the integer column lattice of B (v = 0 in H_1).
bool is_null_class(const SurgeryPresentation& p, const MeridianClass& v);

/// Canonical representative of v in coker B: SNF coordinates are reduced into
/// [0, d_i) and lifted back.
MeridianClass reduce_class(const SurgeryPresentation& p, const MeridianClass& v);

}  // namespace gompf
