#pragma once

#include "gompf/rational.hpp"

namespace gompf {

/// λ is the Casson-Walker invariant, normalized as λ_W / 2 on Q-spheres. It is
/// always supplied by the caller.
struct ThetaInput {
  Rational lambda;
  Rational p1;
};

/// Θ(M, X) = 6 λ(M) + p_1(X) / 4.
Rational theta_invariant(const ThetaInput& in);

/// Θ(M, Y) - Θ(M, X) equals lk(L_{X=Y}, L_{X=-Y}); returns that linking number.
Rational theta_variation(const Rational& delta_lk);

}  // namespace gompf
