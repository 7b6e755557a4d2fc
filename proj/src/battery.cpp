#include "gompf/battery.hpp"

#include <algorithm>
#include <functional>

#include "gompf/combing.hpp"
#include "gompf/errors.hpp"
#include "gompf/framed.hpp"
#include "gompf/generators.hpp"
#include "gompf/image.hpp"
#include "gompf/linalg.hpp"
#include "gompf/surgery.hpp"
#include "gompf/theta.hpp"

namespace gompf {

namespace {

constexpr std::size_t kCases = 100;

bool is_zero_vector(const RatVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

void run_cases(CheckTally& tally, std::size_t cases, const std::function<bool()>& body) {
  for (std::size_t k = 0; k < cases; ++k) {
    bool ok = false;
    try {
      ok = body();
    } catch (const std::exception&) {
      ok = false;
    }
    ++(ok ? tally.passed : tally.failed);
  }
}

std::size_t random_dim(Rng& rng, long max) { return static_cast<std::size_t>(rng.uniform(0, max)); }

bool snf_holds(const IntMatrix& a) {
  const SnfResult snf = smith_normal_form(a);
  if (!(snf.U * a * snf.V == snf.D)) return false;
  if (abs(determinant(snf.U)) != 1 || abs(determinant(snf.V)) != 1) return false;
  const auto diag = snf.D.diagonal();
  for (std::size_t i = 0; i < snf.D.rows(); ++i)
    for (std::size_t j = 0; j < snf.D.cols(); ++j)
      if (i != j && snf.D(i, j) != 0) return false;
  for (std::size_t i = 0; i < diag.size(); ++i) {
    if (diag[i] < 0) return false;
    if (i + 1 < diag.size() && diag[i] == 0 && diag[i + 1] != 0) return false;
    if (i + 1 < diag.size() && diag[i + 1] != 0 &&
        !mpz_divisible_p(diag[i + 1].get_mpz_t(), diag[i].get_mpz_t()))
      return false;
  }
  if (a.is_square()) {
    Integer prod = 1;
    for (const auto& d : diag) prod *= d;
    if (prod != abs(determinant(a))) return false;
  }
  return true;
}

bool solve_holds(const IntMatrix& a, const IntVector& b) {
  const RationalSolve s = solve_rational(a, b);
  const RatMatrix ra = to_rational(a);
  for (const auto& z : s.kernel)
    if (!is_zero_vector(ra * z)) return false;
  IntMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const bool expect = rank(a) == rank(aug);
  if (s.solution.has_value() != expect) return false;
  if (s.solution && ra * *s.solution != to_rational(b)) return false;
  return s.kernel.size() == a.cols() - rank(a);
}

}  // namespace

std::vector<CheckTally> run_battery(std::uint64_t seed) {
  Rng rng(seed);
  std::vector<CheckTally> out;
  auto tally = [&out](const char* name) -> CheckTally& {
    out.push_back(CheckTally{name, 0, 0});
    return out.back();
  };

  run_cases(tally("snf"), kCases, [&] {
    return snf_holds(random_matrix(rng, random_dim(rng, 6), random_dim(rng, 6), 9));
  });

  run_cases(tally("signature-congruence"), kCases, [&] {
    const std::size_t n = random_dim(rng, 6);
    const IntMatrix s = rng.coin() ? random_symmetric(rng, n, 9) : random_singular_symmetric(rng, n, 5);
    const IntMatrix p = random_unimodular(rng, n, 12);
    const SignatureTriple sig = signature(s);
    return signature(p.transpose() * s * p) == sig && sig.n_zero == kernel_basis(s).size() &&
           sig.n_plus + sig.n_minus + sig.n_zero == n;
  });

  run_cases(tally("solve-rational"), kCases, [&] {
    const std::size_t m = random_dim(rng, 6);
    const std::size_t n = random_dim(rng, 6);
    const IntMatrix a = random_matrix(rng, m, n, rng.coin() ? 1 : 9);
    return solve_holds(a, random_vector(rng, m, 9));
  });

  run_cases(tally("linking-form"), kCases, [&] {
    const SurgeryPresentation p(random_symmetric(rng, static_cast<std::size_t>(rng.uniform(1, 4)), 5));
    const IntVector t = random_torsion_characteristic(rng, p, 3);
    const MeridianClass v{t};
    IntVector shifted = p.linking_matrix() * random_vector(rng, p.size(), 4);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += t[i];
    const MeridianClass w{random_torsion_characteristic(rng, p, 3)};
    return linking_form(p, v) == linking_form(p, MeridianClass{shifted}) &&
           meridian_pairing(p, v, w) == meridian_pairing(p, w, v);
  });

  auto random_combing = [&rng]() {
    const SurgeryPresentation p(rng.coin()
                                    ? random_symmetric(rng, random_dim(rng, 5), 5)
                                    : random_singular_symmetric(rng, random_dim(rng, 5), 3));
    IntVector c = random_torsion_characteristic(rng, p, 3);
    return CombingSpec{p, std::move(c), Integer(rng.uniform(-5, 5))};
  };

  run_cases(tally("gamma-law"), kCases, [&] {
    const CombingSpec x = random_combing();
    const Integer t(rng.uniform(-3, 3));
    return p1(gamma(x, t)).value - p1(x).value == Rational(4 * t) &&
           (t == 0 || !combing_equal(x, gamma(x, t)));
  });

  run_cases(tally("spin-c-coset"), kCases, [&] {
    const CombingSpec x = random_combing();
    const IntVector u = x.presentation.linking_matrix() * random_vector(rng, x.presentation.size(), 3);
    IntVector moved = x.c;
    for (std::size_t i = 0; i < moved.size(); ++i) moved[i] += 2 * u[i];
    const Rational diff = theta_g(x.presentation, moved) - theta_g(x.presentation, x.c);
    return is_integer(diff) && mpz_divisible_ui_p(diff.get_num_mpz_t(), 8) &&
           spin_c_equal(x.presentation, x.c, moved);
  });

  run_cases(tally("parity"), kCases, [&] {
    const std::size_t n = random_dim(rng, 6);
    const SurgeryPresentation p(rng.coin() ? random_symmetric(rng, n, 5) : random_singular_symmetric(rng, n, 3));
    const CombingSpec ref = reference_parallelization(p);
    return euler_class(p, ref.c).is_zero && is_integer(p1(ref).value) && parity_check(p);
  });

  run_cases(tally("stabilization"), kCases, [&] {
    const CombingSpec x = random_combing();
    const int sign = rng.coin() ? 1 : -1;
    const Integer c0(2 * rng.uniform(-5, 4) + 1);
    return p1(stabilize(x, sign, c0)) == p1(x);
  });

  run_cases(tally("hf-grading-step"), kCases, [&] {
    const CombingSpec x = random_combing();
    return hf_grading(gamma(x, Integer(1))) - hf_grading(x) == 1;
  });

  run_cases(tally("telescoping"), kCases, [&] {
    const CombingSpec x = random_combing();
    CombingSpec y = x;
    CombingSpec z = x;
    y.c = random_torsion_characteristic(rng, x.presentation, 3);
    z.c = random_torsion_characteristic(rng, x.presentation, 3);
    y.gamma_offset = rng.uniform(-3, 3);
    const Rational px = p1(x).value, py = p1(y).value, pz = p1(z).value;
    return pz - px == (pz - py) + (py - px);
  });

  run_cases(tally("band-sum-conservation"), kCases, [&] {
    const std::size_t k = static_cast<std::size_t>(rng.uniform(2, 5));
    const FramedLinkData f = random_framed(rng, k, 3, 4);
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k) - 2));
    if (j >= i) ++j;
    const FramedLinkData g = band_sum(f, i, j);
    return total_self_linking(g) == total_self_linking(f) && summed_class(g) == summed_class(f);
  });

  run_cases(tally("hopf-shift"), kCases, [&] {
    FramedLinkData f = random_framed(rng, static_cast<std::size_t>(rng.uniform(0, 4)), 0, 4);
    f.classes.reset();
    const Rational tau(rng.uniform(-10, 10));
    return pontrjagin_p1(tau, add_hopf(f, 1)) - pontrjagin_p1(tau, f) == 4 &&
           pontrjagin_p1(tau, add_hopf(f, -1)) - pontrjagin_p1(tau, f) == -4;
  });

  run_cases(tally("theta-law"), kCases, [&] {
    const Rational lambda = make_rational(rng.uniform(-24, 24), rng.uniform(1, 24));
    const Rational p = make_rational(rng.uniform(-40, 40), rng.uniform(1, 6));
    const Rational delta = make_rational(rng.uniform(-12, 12), rng.uniform(1, 6));
    return theta_invariant({lambda, p + 4 * delta}) - theta_invariant({lambda, p}) ==
           theta_variation(delta);
  });

  const std::vector<IntMatrix> image_battery = {
      IntMatrix{{2}}, IntMatrix{{3}}, IntMatrix{{4}}, IntMatrix{{5}},
      IntMatrix{{2, 1}, {1, 2}}, IntMatrix{{4, 1}, {1, 4}},
  };
  CheckTally& image = tally("image-theorem");
  for (const auto& b : image_battery)
    run_cases(image, 1, [&] { return p1_image(SurgeryPresentation(b), 10000, 10).status() == "equal"; });

  return out;
}

}  // namespace gompf
