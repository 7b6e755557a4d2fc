#pragma once

// Brute-force reference computations used only by the tests. None of these
// share code paths with the library routines they check: determinants by
// cofactor expansion, invariant factors by determinantal divisors, inertia
// from the characteristic polynomial, F_2 rank by span enumeration.

#include <algorithm>
#include <cstddef>
#include <set>
#include <vector>

#include "gompf/matrix.hpp"
#include "gompf/rational.hpp"

namespace gompf::oracle {

inline Integer cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = a(r, c);
      }
    const Integer term = a(0, j) * cofactor_det(minor);
    if (j % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  subsets(n, k, 0, cur, out);
  return out;
}

/// gcd of all k x k minors (0 when they all vanish).
inline Integer determinantal_divisor(const IntMatrix& a, std::size_t k) {
  Integer g = 0;
  for (const auto& rows : subsets(a.rows(), k))
    for (const auto& cols : subsets(a.cols(), k)) {
      IntMatrix m(k, k);
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) = a(rows[i], cols[j]);
      const Integer d = cofactor_det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    }
  return g;
}

/// Invariant factors d_1 | d_2 | ... from D_k / D_{k-1}, padded with zeros
/// to min(rows, cols).
inline IntVector invariant_factors(const IntMatrix& a) {
  const std::size_t k = std::min(a.rows(), a.cols());
  IntVector out(k);
  Integer prev = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const Integer d = determinantal_divisor(a, i);
    if (d == 0) break;
    out[i - 1] = d / prev;
    prev = d;
  }
  return out;
}

inline std::size_t minor_rank(const IntMatrix& a) {
  std::size_t r = 0;
  for (std::size_t k = 1; k <= std::min(a.rows(), a.cols()); ++k)
    if (determinantal_divisor(a, k) != 0) r = k;
  return r;
}

/// Coefficients of det(xI - A), highest degree first, by Faddeev-LeVerrier.
inline RatVector char_poly(const IntMatrix& a) {
  const std::size_t n = a.rows();
  const RatMatrix ra = to_rational(a);
  RatVector coeffs(n + 1);
  coeffs[0] = 1;
  RatMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RatMatrix next = ra * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[k - 1];
    m = next;
    const RatMatrix am = ra * m;
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    coeffs[k] = -tr / static_cast<long>(k);
  }
  return coeffs;
}

inline std::size_t sign_changes(const RatVector& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& x : c) {
    const int s = sgn(x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

struct Inertia {
  std::size_t plus, minus, zero;
};

/// Descartes' rule is exact for real-rooted polynomials, and the
/// characteristic polynomial of a symmetric matrix is real-rooted.
inline Inertia descartes_inertia(const IntMatrix& s) {
  RatVector p = char_poly(s);
  std::size_t zero = 0;
  while (!p.empty() && p.back() == 0) {
    p.pop_back();
    ++zero;
  }
  RatVector q = p;  // p(-x), up to an overall sign
  const std::size_t deg = p.size() - 1;
  for (std::size_t i = 0; i < q.size(); ++i)
    if ((deg - i) % 2 == 1) q[i] = -q[i];
  return Inertia{sign_changes(p), sign_changes(q), zero};
}

/// Rank over F_2 as log2 of the size of the column span.
inline std::size_t span_rank_mod2(const IntMatrix& a) {
  std::set<std::vector<int>> span;
  const std::size_t n = a.cols();
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<int> v(a.rows(), 0);
    for (std::size_t j = 0; j < n; ++j)
      if (mask & (1UL << j))
        for (std::size_t i = 0; i < a.rows(); ++i) v[i] ^= mpz_odd_p(a(i, j).get_mpz_t()) ? 1 : 0;
    span.insert(v);
  }
  std::size_t r = 0;
  while ((1UL << r) < span.size()) ++r;
  return r;
}

inline IntMatrix adjugate(const IntMatrix& a) {
  const std::size_t n = a.rows();
  IntMatrix adj(n, n);
  if (n == 1) {
    adj(0, 0) = 1;
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix m(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          m(rr, cc++) = a(r, c);
        }
        ++rr;
      }
      const Integer d = cofactor_det(m);
      adj(j, i) = (i + j) % 2 == 0 ? d : Integer(-d);
    }
  return adj;
}

/// For nonsingular B: v ∈ B Z^n iff adj(B) v ≡ 0 (mod det B).
inline bool in_lattice_nonsingular(const IntMatrix& b, const IntVector& v) {
  const Integer det = cofactor_det(b);
  const IntVector w = adjugate(b) * v;
  return std::all_of(w.begin(), w.end(),
                     [&det](const Integer& x) { return mpz_divisible_p(x.get_mpz_t(), det.get_mpz_t()); });
}

/// -v^T B^{-1} w via B^{-1} = adj(B) / det(B).
inline Rational pairing_nonsingular(const IntMatrix& b, const IntVector& v, const IntVector& w) {
  const IntVector x = adjugate(b) * w;
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * x[i];
  return -make_rational(s, cofactor_det(b));
}

}  // namespace gompf::oracle
