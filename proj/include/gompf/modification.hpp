#pragma once

#include <variant>

#include "gompf/combing.hpp"
#include "gompf/rational.hpp"

namespace gompf {

// Local modifications of a combing X along a link L, and the induced change
// of p_1. Only the linking data enters.

/// D(X, L, L∥, Z, η): lk_euler = lk(L, L(Z ⊂ X⊥)), lk_par = lk(L, L∥).
struct DModification {
  int eta = 1;
  Rational lk_euler;
  Rational lk_par;
};

/// D(X, L, L∥, Z, η) when Z extends over all of M.
struct GlobalZModification {
  Rational lk_par;
};

/// Z twisted r times around X along one component.
struct RTwistModification {
  Integer r;
  int eta = 1;
};

/// k half-twists of a 2-fold satellite.
struct HalfTwistModification {
  Integer k;
};

using Modification =
    std::variant<DModification, GlobalZModification, RTwistModification, HalfTwistModification>;

/// Throws BadEta unless η = ±1.
P1Value apply_modification(const P1Value& p, const Modification& m);

}  // namespace gompf
