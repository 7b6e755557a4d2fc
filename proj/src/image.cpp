#include "gompf/image.hpp"

#include <algorithm>
#include <vector>

#include "gompf/combing.hpp"
#include "gompf/linalg.hpp"

namespace gompf {

std::string P1ImageReport::status() const {
  if (!enumeration_is_subset) return "mismatch";
  return threshold_reached ? "equal" : "subset";
}

P1ImageReport p1_image(const SurgeryPresentation& p, std::size_t cap, std::size_t box) {
  P1ImageReport report;
  const IntMatrix& b = p.linking_matrix();
  const std::size_t n = p.size();

  const Rational p1_tau = p1(reference_parallelization(p)).value;
  for (const auto& [cls, ell] : enumerate_torsion(p, cap))
    report.formula_side.insert(ModClass::mod_four(p1_tau - 4 * ell.value()));

  // Characteristic values allowed in each coordinate.
  std::vector<std::vector<Integer>> choices(n);
  const long bound = static_cast<long>(box);
  for (std::size_t i = 0; i < n; ++i)
    for (long v = -bound; v <= bound; ++v)
      if (mpz_even_p(Integer(v - b(i, i)).get_mpz_t())) choices[i].emplace_back(v);

  const bool any_empty =
      std::any_of(choices.begin(), choices.end(), [](const auto& c) { return c.empty(); });
  if (!any_empty) {
    const Rational shift(2 * (static_cast<long>(n) + 1) +
                         3 * static_cast<long>(signature(b).value()));
    const RatMatrix rb = to_rational(b);
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      IntVector c(n);
      for (std::size_t i = 0; i < n; ++i) c[i] = choices[i][idx[i]];
      ++report.vectors_enumerated;
      if (const auto x = solve_rational(rb, to_rational(c)).solution)
        report.enumeration_side.insert(ModClass::mod_four(dot(c, *x) - shift));

      std::size_t k = n;
      bool done = true;
      while (k > 0) {
        --k;
        if (++idx[k] < choices[k].size()) {
          done = false;
          break;
        }
        idx[k] = 0;
      }
      if (done) break;
    }
  }

  report.enumeration_is_subset =
      std::includes(report.formula_side.begin(), report.formula_side.end(),
                    report.enumeration_side.begin(), report.enumeration_side.end());
  report.threshold_reached =
      report.enumeration_is_subset && report.enumeration_side.size() == report.formula_side.size();
  return report;
}

}  // namespace gompf
