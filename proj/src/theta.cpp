#include "gompf/theta.hpp"

namespace gompf {

Rational theta_invariant(const ThetaInput& in) { return 6 * in.lambda + in.p1 / 4; }

Rational theta_variation(const Rational& delta_lk) { return delta_lk; }

}  // namespace gompf
