#include "gompf/combing.hpp"

#include <string>

#include "gompf/errors.hpp"
#include "gompf/linalg.hpp"

namespace gompf {

void validate_combing(const SurgeryPresentation& p, const IntVector& c) {
  if (c.size() != p.size())
    throw DomainError(ErrorKind::DimensionMismatch,
                      "combing vector has length " + std::to_string(c.size()) + ", expected " +
                          std::to_string(p.size()));
  const IntMatrix& b = p.linking_matrix();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Integer diff = c[i] - b(i, i);
    if (mpz_odd_p(diff.get_mpz_t()))
      throw DomainError(ErrorKind::NotCharacteristic,
                        "c[" + std::to_string(i) + "] = " + c[i].get_str() +
                            " has the wrong parity for framing " + b(i, i).get_str(),
                        i);
  }
}

EulerClassInfo euler_class(const SurgeryPresentation& p, const IntVector& c) {
  validate_combing(p, c);
  EulerClassInfo info;
  info.class_vector = MeridianClass{c};
  info.is_torsion = is_torsion_class(p, info.class_vector);
  info.is_zero = info.is_torsion && is_null_class(p, info.class_vector);
  return info;
}

Rational theta_g(const SurgeryPresentation& p, const IntVector& c) {
  validate_combing(p, c);
  const auto sol = solve_rational(p.linking_matrix(), c).solution;
  if (!sol) throw DomainError(ErrorKind::NonTorsion, "combing has a non-torsion Euler class");
  const long n = static_cast<long>(p.size());
  const long sigma = static_cast<long>(signature(p.linking_matrix()).value());
  return dot(c, *sol) - Rational(2 * (n + 1) + 3 * sigma);
}

P1Value p1(const CombingSpec& x) {
  return P1Value{theta_g(x.presentation, x.c) + Rational(4 * x.gamma_offset)};
}

CombingSpec gamma(const CombingSpec& x, const Integer& t) {
  CombingSpec out = x;
  out.gamma_offset += t;
  return out;
}

bool spin_c_equal(const SurgeryPresentation& p, const IntVector& c, const IntVector& c_other) {
  validate_combing(p, c);
  validate_combing(p, c_other);
  // Both are characteristic, so the difference is even.
  IntVector half(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    half[i] = c[i] - c_other[i];
    mpz_divexact_ui(half[i].get_mpz_t(), half[i].get_mpz_t(), 2);
  }
  return is_null_class(p, MeridianClass{half});
}

bool combing_equal(const CombingSpec& x, const CombingSpec& y) {
  if (!(x.presentation == y.presentation))
    throw DomainError(ErrorKind::PresentationMismatch,
                      "combings live on different surgery presentations");
  const P1Value px = p1(x);  // throws NonTorsion
  const P1Value py = p1(y);
  return spin_c_equal(x.presentation, x.c, y.c) && px == py;
}

Integer gamma_orbit_modulus(const SurgeryPresentation& p, const IntVector& c) {
  validate_combing(p, c);
  Integer g = 0;
  for (const auto& z : kernel_basis(p.linking_matrix())) {
    const Integer pairing = dot(c, z);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), pairing.get_mpz_t());
  }
  return g;
}

Rational hf_grading(const CombingSpec& x) { return (Rational(2) + p1(x).value) / 4; }

CombingSpec reference_parallelization(const SurgeryPresentation& p) {
  const IntMatrix& b = p.linking_matrix();
  // Solvable for every symmetric B: the diagonal is the characteristic
  // element of the F_2 form, which lies in its image.
  const auto u = solve_mod2(b, b.diagonal());
  return CombingSpec{p, b * *u, 0};
}

bool parity_check(const SurgeryPresentation& p) {
  const Rational p1_tau = p1(reference_parallelization(p)).value;
  if (!is_integer(p1_tau)) return false;
  const HomologySummary h = homology_summary(p);
  const Integer rest =
      p1_tau.get_num() - Integer(static_cast<unsigned long>(h.dim_h1_mod2)) -
      Integer(static_cast<unsigned long>(h.betti_1));
  return mpz_even_p(rest.get_mpz_t()) != 0;
}

ReparamDelta reparam_delta(const Integer& degree) {
  return ReparamDelta{2 * degree, make_rational(-degree, 2)};
}

CombingSpec stabilize(const CombingSpec& x, int sign, const Integer& c0) {
  if (sign != 1 && sign != -1)
    throw DomainError(ErrorKind::BadSign, "stabilization framing must be +1 or -1");
  if (mpz_even_p(c0.get_mpz_t()))
    throw DomainError(ErrorKind::EvenCoefficient,
                      "c0 = " + c0.get_str() + " is not characteristic on a ±1-framed unknot");
  validate_combing(x.presentation, x.c);

  IntMatrix unknot(1, 1);
  unknot(0, 0) = sign;
  CombingSpec out;
  out.presentation = SurgeryPresentation(direct_sum(x.presentation.linking_matrix(), unknot));
  out.c = x.c;
  out.c.push_back(c0);

  // θ_G changes by sign·c0² - 2 - 3·sign; c0 odd makes this a multiple of 4
  // (c0² ≡ 1 mod 8).
  const Integer delta = sign * c0 * c0 - 2 - 3 * sign;
  Integer quarter;
  mpz_divexact_ui(quarter.get_mpz_t(), delta.get_mpz_t(), 4);
  out.gamma_offset = x.gamma_offset - quarter;
  return out;
}

}  // namespace gompf
