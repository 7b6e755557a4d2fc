#include "gompf/surgery.hpp"

#include <cassert>
#include <string>

#include "gompf/errors.hpp"

namespace gompf {

ModClass::ModClass(const Rational& value, const Rational& modulus)
    : value_(reduce_mod(value, modulus)), modulus_(modulus) {}

std::string ModClass::to_string() const {
  return gompf::to_string(value_) + " (mod " + gompf::to_string(modulus_) + ")";
}

SurgeryPresentation::SurgeryPresentation(IntMatrix b) : b_(std::move(b)) {
  if (!b_.is_symmetric())
    throw DomainError(ErrorKind::NotSymmetric, "linking matrix must be square and symmetric");
}

namespace {

void check_length(const SurgeryPresentation& p, const MeridianClass& v) {
  if (v.v.size() != p.size())
    throw DomainError(ErrorKind::DimensionMismatch,
                      "meridian class has " + std::to_string(v.v.size()) +
                          " coefficients, presentation has " + std::to_string(p.size()) +
                          " components");
}

RatVector solve_torsion(const SurgeryPresentation& p, const MeridianClass& v) {
  check_length(p, v);
  RationalSolve s = solve_rational(p.linking_matrix(), v.v);
  if (!s.solution) throw DomainError(ErrorKind::NonTorsion, "meridian class is not torsion in H_1");
  return *s.solution;
}

}  // namespace

HomologySummary homology_summary(const SurgeryPresentation& p) {
  const SnfResult snf = smith_normal_form(p.linking_matrix());
  HomologySummary out;
  for (const auto& d : snf.D.diagonal()) {
    if (d == 0) {
      ++out.betti_1;
      ++out.dim_h1_mod2;
      continue;
    }
    if (mpz_even_p(d.get_mpz_t())) ++out.dim_h1_mod2;
    if (d > 1) {
      out.invariant_factors.push_back(d);
      out.torsion_order *= d;
    }
  }
  out.kernel_basis = kernel_basis(p.linking_matrix());
  return out;
}

Rational meridian_pairing(const SurgeryPresentation& p, const MeridianClass& v,
                          const MeridianClass& w) {
  // w must be torsion too: otherwise the kernel part of x pairs nontrivially.
  const RatVector x = solve_torsion(p, v);
  solve_torsion(p, w);
  return -dot(w.v, x);
}

ModClass linking_form(const SurgeryPresentation& p, const MeridianClass& v) {
  return ModClass::mod_one(meridian_pairing(p, v, v));
}

bool is_torsion_class(const SurgeryPresentation& p, const MeridianClass& v) {
  check_length(p, v);
  return solve_rational(p.linking_matrix(), v.v).solution.has_value();
}

bool is_null_class(const SurgeryPresentation& p, const MeridianClass& v) {
  check_length(p, v);
  const SnfResult snf = smith_normal_form(p.linking_matrix());
  const IntVector y = snf.U * v.v;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Integer& d = snf.D(i, i);
    if (d == 0 ? y[i] != 0 : !mpz_divisible_p(y[i].get_mpz_t(), d.get_mpz_t())) return false;
  }
  return true;
}

MeridianClass reduce_class(const SurgeryPresentation& p, const MeridianClass& v) {
  check_length(p, v);
  const SnfResult snf = smith_normal_form(p.linking_matrix());
  IntVector y = snf.U * v.v;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const Integer& d = snf.D(i, i);
    if (d != 0) mpz_fdiv_r(y[i].get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
  }
  return MeridianClass{unimodular_inverse(snf.U) * y};
}

std::vector<std::pair<MeridianClass, ModClass>> enumerate_torsion(const SurgeryPresentation& p,
                                                                  std::size_t cap) {
  const SnfResult snf = smith_normal_form(p.linking_matrix());
  const std::size_t n = p.size();

  std::vector<std::size_t> slots;
  std::vector<unsigned long> radix;
  Integer order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const Integer& d = snf.D(i, i);
    if (d > 1) {
      slots.push_back(i);
      order *= d;
    }
  }
  if (order > Integer(static_cast<unsigned long>(cap)))
    throw DomainError(ErrorKind::CapExceeded,
                      "torsion subgroup has order " + order.get_str() + ", cap is " +
                          std::to_string(cap));
  for (auto i : slots) radix.push_back(snf.D(i, i).get_ui());

  const IntMatrix u_inv = unimodular_inverse(snf.U);
  std::vector<std::pair<MeridianClass, ModClass>> out;
  out.reserve(order.get_ui());

  std::vector<unsigned long> digits(slots.size(), 0);
  while (true) {
    IntVector y(n);
    for (std::size_t k = 0; k < slots.size(); ++k) y[slots[k]] = digits[k];
    MeridianClass v{u_inv * y};
    ModClass ell = linking_form(p, v);
    out.emplace_back(std::move(v), std::move(ell));

    std::size_t k = slots.size();
    while (k > 0) {
      --k;
      if (++digits[k] < radix[k]) break;
      digits[k] = 0;
      if (k == 0) return out;
    }
    if (slots.empty()) return out;
  }
}

}  // namespace gompf
