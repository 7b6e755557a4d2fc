#include "gompf/generators.hpp"

#include <cassert>
#include <limits>

#include "gompf/linalg.hpp"

namespace gompf {

long Rng::uniform(long lo, long hi) {
  assert(lo <= hi);
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

IntMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

IntMatrix random_symmetric(Rng& rng, std::size_t n, long bound) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      m(i, j) = rng.uniform(-bound, bound);
      m(j, i) = m(i, j);
    }
  return m;
}

IntMatrix random_unimodular(Rng& rng, std::size_t n, std::size_t steps) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && rng.coin()) u(0, 0) = -1;
    return u;
  }
  for (std::size_t s = 0; s < steps; ++s) {
    const auto i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    switch (rng.uniform(0, 2)) {
      case 0: u.add_row_multiple(i, j, Integer(rng.uniform(-2, 2))); break;
      case 1: u.swap_rows(i, j); break;
      default: u.negate_row(i); break;
    }
  }
  return u;
}

IntMatrix random_singular_symmetric(Rng& rng, std::size_t n, long bound) {
  if (n == 0) return IntMatrix();
  const IntMatrix m = random_matrix(rng, n, n, 2);
  IntMatrix d(n, n);
  const auto zero_at = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
  for (std::size_t i = 0; i < n; ++i)
    if (i != zero_at) d(i, i) = rng.uniform(-bound, bound);
  return m.transpose() * d * m;
}

IntVector random_vector(Rng& rng, std::size_t n, long bound) {
  IntVector v(n);
  for (auto& x : v) x = rng.uniform(-bound, bound);
  return v;
}

IntVector random_torsion_characteristic(Rng& rng, const SurgeryPresentation& p, long bound) {
  const IntMatrix& b = p.linking_matrix();
  const std::size_t n = p.size();
  IntVector c = reference_parallelization(p).c;

  IntVector t = b * random_vector(rng, n, bound);
  Integer g = 0;
  for (const auto& x : t) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  if (g > 1)
    for (auto& x : t) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  const IntVector lattice = b * random_vector(rng, n, bound);
  for (std::size_t i = 0; i < n; ++i) c[i] += 2 * t[i] + 2 * lattice[i];
  return c;
}

FramedLinkData random_framed(Rng& rng, std::size_t components, std::size_t ambient_dim, long bound) {
  FramedLinkData f;
  f.lambda = RatMatrix(components, components);
  for (std::size_t i = 0; i < components; ++i)
    for (std::size_t j = i; j < components; ++j) {
      f.lambda(i, j) = make_rational(rng.uniform(-bound, bound), rng.uniform(1, 4));
      f.lambda(j, i) = f.lambda(i, j);
    }
  f.classes = random_matrix(rng, components, ambient_dim, bound);
  return f;
}

}  // namespace gompf
