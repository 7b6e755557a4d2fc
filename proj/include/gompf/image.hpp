#pragma once

#include <cstddef>
#include <set>
#include <string>

#include "gompf/mod_class.hpp"
#include "gompf/surgery.hpp"

namespace gompf {

/// Residues mod 4 of p_1 over the torsion combings of a presentation, computed
/// two ways.
struct P1ImageReport {
  /// p_1(τ) - 4 ℓ(t) over t ∈ Torsion(H_1), τ the reference parallelization.
  std::set<ModClass> formula_side;
  /// θ_G(c) over characteristic torsion c with every |c_i| <= box.
  std::set<ModClass> enumeration_side;
  std::size_t vectors_enumerated = 0;
  bool enumeration_is_subset = false;
  /// True once the box was large enough to realize every residue.
  bool threshold_reached = false;

  /// "equal", "subset" (box too small to see everything) or "mismatch".
  std::string status() const;
};

P1ImageReport p1_image(const SurgeryPresentation& p, std::size_t cap, std::size_t box);

}  // namespace gompf
