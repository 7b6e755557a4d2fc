#include "gompf/framed.hpp"

#include <string>

#include "gompf/errors.hpp"

namespace gompf {

void validate_framed(const FramedLinkData& f) {
  if (!f.lambda.is_symmetric())
    throw DomainError(ErrorKind::NotSymmetric, "framed linking matrix must be square and symmetric");
  if (f.classes && f.classes->rows() != f.lambda.rows())
    throw DomainError(ErrorKind::DimensionMismatch,
                      "framed link has " + std::to_string(f.lambda.rows()) + " components but " +
                          std::to_string(f.classes->rows()) + " homology classes");
}

Rational total_self_linking(const FramedLinkData& f) {
  Rational total = 0;
  for (const auto& x : f.lambda.data()) total += x;
  return total;
}

MeridianClass summed_class(const FramedLinkData& f) {
  if (!f.classes) throw DomainError(ErrorKind::MissingClasses, "framed link carries no homology classes");
  IntVector sum(f.classes->cols());
  for (std::size_t i = 0; i < f.classes->rows(); ++i)
    for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += (*f.classes)(i, k);
  return MeridianClass{std::move(sum)};
}

FramedLinkData band_sum(const FramedLinkData& f, std::size_t i, std::size_t j) {
  validate_framed(f);
  const std::size_t n = f.size();
  if (i >= n || j >= n || i == j)
    throw DomainError(ErrorKind::IndexError,
                      "band sum needs two distinct components below " + std::to_string(n) +
                          ", got " + std::to_string(i) + " and " + std::to_string(j),
                      i >= n ? i : j);
  const std::size_t keep = i < j ? i : j;
  const std::size_t drop = i < j ? j : i;

  // Merge into `keep` in place, then delete `drop`.
  RatMatrix merged = f.lambda;
  const Rational self = f.lambda(i, i) + f.lambda(j, j) + 2 * f.lambda(i, j);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == i || k == j) continue;
    merged(keep, k) = f.lambda(i, k) + f.lambda(j, k);
    merged(k, keep) = merged(keep, k);
  }
  merged(keep, keep) = self;

  FramedLinkData out;
  out.lambda = RatMatrix(n - 1, n - 1);
  auto src = [drop](std::size_t a) { return a < drop ? a : a + 1; };
  for (std::size_t a = 0; a + 1 < n; ++a)
    for (std::size_t b = 0; b + 1 < n; ++b) out.lambda(a, b) = merged(src(a), src(b));

  if (f.classes) {
    const IntMatrix& cls = *f.classes;
    IntMatrix next(n - 1, cls.cols());
    for (std::size_t a = 0; a + 1 < n; ++a)
      for (std::size_t k = 0; k < cls.cols(); ++k) {
        next(a, k) = cls(src(a), k);
        if (src(a) == keep) next(a, k) += cls(drop, k);
      }
    out.classes = std::move(next);
  }
  return out;
}

FramedLinkData add_hopf(const FramedLinkData& f, int sign) {
  if (sign != 1 && sign != -1)
    throw DomainError(ErrorKind::BadSign, "Hopf sign must be +1 or -1");
  validate_framed(f);
  const std::size_t n = f.size();
  FramedLinkData out;
  out.lambda = RatMatrix(n + 1, n + 1);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out.lambda(a, b) = f.lambda(a, b);
  out.lambda(n, n) = -sign;
  if (f.classes) {
    IntMatrix next(n + 1, f.classes->cols());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t k = 0; k < next.cols(); ++k) next(a, k) = (*f.classes)(a, k);
    out.classes = std::move(next);
  }
  return out;
}

FramedLinkData shift_parallel(const FramedLinkData& f, std::size_t i, const Integer& delta) {
  validate_framed(f);
  if (i >= f.size())
    throw DomainError(ErrorKind::IndexError, "no component " + std::to_string(i), i);
  FramedLinkData out = f;
  out.lambda(i, i) += Rational(delta);
  return out;
}

Rational pontrjagin_p1(const Rational& p1_tau, const FramedLinkData& f,
                       const SurgeryPresentation& ambient) {
  validate_framed(f);
  if (f.classes) {
    if (f.classes->cols() != ambient.size())
      throw DomainError(ErrorKind::DimensionMismatch,
                        "link classes have " + std::to_string(f.classes->cols()) +
                            " coefficients, ambient presentation has " +
                            std::to_string(ambient.size()) + " components");
    if (!is_torsion_class(ambient, summed_class(f)))
      throw DomainError(ErrorKind::NonTorsion, "framed link is not rationally null-homologous");
  }
  return p1_tau - 4 * total_self_linking(f);
}

namespace {

void require_null_classes(const FramedLinkData& f) {
  validate_framed(f);
  if (!f.classes) return;
  for (std::size_t i = 0; i < f.classes->rows(); ++i)
    if (!is_zero(f.classes->row(i)))
      throw DomainError(ErrorKind::NotZSphere,
                        "component " + std::to_string(i) + " has a nonzero homology class", i);
}

}  // namespace

bool framed_cobordant_zsphere(const FramedLinkData& a, const FramedLinkData& b) {
  require_null_classes(a);
  require_null_classes(b);
  return total_self_linking(a) == total_self_linking(b);
}

FramedCobordismClass cobordism_class(const FramedLinkData& f, const SurgeryPresentation& ambient) {
  validate_framed(f);
  const MeridianClass sum = summed_class(f);
  return FramedCobordismClass{reduce_class(ambient, sum), total_self_linking(f)};
}

}  // namespace gompf
