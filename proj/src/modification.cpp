#include "gompf/modification.hpp"

#include <string>
#include <type_traits>

#include "gompf/errors.hpp"

namespace gompf {

namespace {

void check_eta(int eta) {
  if (eta != 1 && eta != -1)
    throw DomainError(ErrorKind::BadEta, "eta must be +1 or -1, got " + std::to_string(eta));
}

}  // namespace

P1Value apply_modification(const P1Value& p, const Modification& m) {
  const Rational delta = std::visit(
      [](const auto& mod) -> Rational {
        using T = std::decay_t<decltype(mod)>;
        if constexpr (std::is_same_v<T, DModification>) {
          check_eta(mod.eta);
          return 4 * (mod.eta * mod.lk_euler - mod.lk_par);
        } else if constexpr (std::is_same_v<T, GlobalZModification>) {
          return -4 * mod.lk_par;
        } else if constexpr (std::is_same_v<T, RTwistModification>) {
          check_eta(mod.eta);
          return Rational(4 * mod.eta * mod.r);
        } else {
          return Rational(-4 * mod.k);
        }
      },
      m);
  return P1Value{p.value + delta};
}

}  // namespace gompf
