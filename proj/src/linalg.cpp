#include "gompf/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "gompf/errors.hpp"

namespace gompf {

std::size_t SnfResult::rank() const {
  std::size_t r = 0;
  for (const auto& d : D.diagonal())
    if (d != 0) ++r;
  return r;
}

namespace {

struct Pivot {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero |entry| of the trailing block starting at (s, s); first hit
// in row-major order wins ties.
std::optional<Pivot> smallest_pivot(const IntMatrix& d, std::size_t s) {
  std::optional<Pivot> best;
  Integer best_abs;
  for (std::size_t i = s; i < d.rows(); ++i)
    for (std::size_t j = s; j < d.cols(); ++j) {
      if (d(i, j) == 0) continue;
      Integer a = abs(d(i, j));
      if (!best || a < best_abs) {
        best = Pivot{i, j};
        best_abs = std::move(a);
      }
    }
  return best;
}

// Clears row s and column s below/right of the pivot with truncated-quotient
// steps. Returns true when both are fully zero afterwards.
bool eliminate_cross(IntMatrix& d, IntMatrix& u, IntMatrix& v, std::size_t s) {
  bool clean = true;
  const Integer p = d(s, s);
  for (std::size_t i = s + 1; i < d.rows(); ++i) {
    if (d(i, s) == 0) continue;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), d(i, s).get_mpz_t(), p.get_mpz_t());
    if (q != 0) {
      const Integer neg = -q;
      d.add_row_multiple(i, s, neg);
      u.add_row_multiple(i, s, neg);
    }
    if (d(i, s) != 0) clean = false;
  }
  for (std::size_t j = s + 1; j < d.cols(); ++j) {
    if (d(s, j) == 0) continue;
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), d(s, j).get_mpz_t(), p.get_mpz_t());
    if (q != 0) {
      const Integer neg = -q;
      d.add_col_multiple(j, s, neg);
      v.add_col_multiple(j, s, neg);
    }
    if (d(s, j) != 0) clean = false;
  }
  return clean;
}

std::optional<std::size_t> non_divisible_row(const IntMatrix& d, std::size_t s) {
  for (std::size_t i = s + 1; i < d.rows(); ++i)
    for (std::size_t j = s + 1; j < d.cols(); ++j)
      if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(s, s).get_mpz_t())) return i;
  return std::nullopt;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& a) {
  IntMatrix d = a;
  IntMatrix u = IntMatrix::identity(a.rows());
  IntMatrix v = IntMatrix::identity(a.cols());
  const std::size_t steps = std::min(a.rows(), a.cols());

  for (std::size_t s = 0; s < steps; ++s) {
    bool finished = false;
    while (true) {
      const auto pivot = smallest_pivot(d, s);
      if (!pivot) {
        finished = true;
        break;
      }
      d.swap_rows(s, pivot->row);
      u.swap_rows(s, pivot->row);
      d.swap_cols(s, pivot->col);
      v.swap_cols(s, pivot->col);
      if (!eliminate_cross(d, u, v, s)) continue;
      if (const auto bad = non_divisible_row(d, s)) {
        // Pulling the offending row into row s leaves a remainder smaller than
        // the current pivot on the next pass.
        d.add_row_multiple(s, *bad, Integer(1));
        u.add_row_multiple(s, *bad, Integer(1));
        continue;
      }
      break;
    }
    if (finished) break;
    if (d(s, s) < 0) {
      d.negate_row(s);
      u.negate_row(s);
    }
  }
  return SnfResult{std::move(u), std::move(d), std::move(v)};
}

RationalSolve solve_rational(const RatMatrix& a, const RatVector& b) {
  assert(a.rows() == b.size());
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();

  RatMatrix aug(m, n + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }

  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && aug(p, col) == 0) ++p;
    if (p == m) continue;
    aug.swap_rows(row, p);
    const Rational inv = 1 / aug(row, col);
    for (std::size_t j = 0; j <= n; ++j) aug(row, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || aug(i, col) == 0) continue;
      const Rational f = -aug(i, col);
      aug.add_row_multiple(i, row, f);
    }
    pivot_cols.push_back(col);
    ++row;
  }

  RationalSolve out;
  bool consistent = true;
  for (std::size_t i = row; i < m; ++i)
    if (aug(i, n) != 0) consistent = false;

  if (consistent) {
    RatVector x(n);
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) x[pivot_cols[r]] = aug(r, n);
    out.solution = std::move(x);
  }

  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector z(n);
    z[f] = 1;
    for (std::size_t r = 0; r < pivot_cols.size(); ++r) z[pivot_cols[r]] = -aug(r, f);
    out.kernel.push_back(std::move(z));
  }
  return out;
}

RationalSolve solve_rational(const IntMatrix& a, const IntVector& b) {
  return solve_rational(to_rational(a), to_rational(b));
}

std::size_t rank(const IntMatrix& a) {
  return a.cols() - solve_rational(a, IntVector(a.rows())).kernel.size();
}

SignatureTriple signature(const IntMatrix& s) {
  if (!s.is_symmetric())
    throw DomainError(ErrorKind::NotSymmetric, "signature requires a symmetric matrix");

  RatMatrix m = to_rational(s);
  const std::size_t n = m.rows();
  SignatureTriple out;

  // Simultaneous row/column operations keep m symmetric and congruent to s.
  auto congruent_swap = [&m](std::size_t a, std::size_t b) {
    m.swap_rows(a, b);
    m.swap_cols(a, b);
  };

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, p) == 0) ++p;
    if (p < n) {
      congruent_swap(k, p);
    } else {
      // Zero diagonal: find an off-diagonal partner and substitute
      // e_k -> e_k + e_j, which puts 2 m(k, j) on the diagonal.
      std::optional<std::pair<std::size_t, std::size_t>> hit;
      for (std::size_t i = k; i < n && !hit; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (m(i, j) != 0) {
            hit.emplace(i, j);
            break;
          }
      if (!hit) {
        out.n_zero += n - k;
        break;
      }
      congruent_swap(k, hit->first);
      const std::size_t partner = hit->second;  // > hit->first >= k, untouched by the swap
      m.add_row_multiple(k, partner, Rational(1));
      m.add_col_multiple(k, partner, Rational(1));
    }

    const Rational pivot = m(k, k);
    assert(pivot != 0);
    if (pivot > 0)
      ++out.n_plus;
    else
      ++out.n_minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k) == 0) continue;
      const Rational f = -m(i, k) / pivot;
      m.add_row_multiple(i, k, f);
      m.add_col_multiple(i, k, f);
    }
  }
  return out;
}

std::vector<IntVector> kernel_basis(const IntMatrix& a) {
  const SnfResult snf = smith_normal_form(a);
  std::vector<IntVector> out;
  for (std::size_t j = snf.rank(); j < a.cols(); ++j) {
    IntVector z = snf.V.col(j);
    const auto first = std::find_if(z.begin(), z.end(), [](const Integer& x) { return x != 0; });
    if (first != z.end() && *first < 0)
      for (auto& x : z) x = -x;
    out.push_back(std::move(z));
  }
  return out;
}

IntMatrix unimodular_inverse(const IntMatrix& u) {
  assert(u.is_square());
  const std::size_t n = u.rows();
  IntMatrix out(n, n);
  const RatMatrix ru = to_rational(u);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n);
    e[j] = 1;
    const auto sol = solve_rational(ru, e).solution;
    assert(sol);
    for (std::size_t i = 0; i < n; ++i) {
      assert(is_integer((*sol)[i]));
      out(i, j) = (*sol)[i].get_num();
    }
  }
  return out;
}

Integer determinant(const IntMatrix& a) {
  assert(a.is_square());
  // Bareiss fraction-free elimination.
  IntMatrix m = a;
  const std::size_t n = m.rows();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m(i, j) = std::move(t);
      }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : Integer(sign * m(n - 1, n - 1));
}

namespace {

using Bits = std::vector<std::vector<unsigned char>>;

Bits to_bits(const IntMatrix& a, const IntVector* rhs) {
  Bits rows(a.rows(), std::vector<unsigned char>(a.cols() + (rhs ? 1 : 0)));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = mpz_odd_p(a(i, j).get_mpz_t()) ? 1 : 0;
    if (rhs) rows[i][a.cols()] = mpz_odd_p((*rhs)[i].get_mpz_t()) ? 1 : 0;
  }
  return rows;
}

// Reduced row echelon form over F_2 restricted to the first `ncols` columns.
std::vector<std::size_t> rref_mod2(Bits& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      for (std::size_t j = 0; j < rows[i].size(); ++j) rows[i][j] ^= rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod2(const IntMatrix& a) {
  Bits rows = to_bits(a, nullptr);
  return rref_mod2(rows, a.cols()).size();
}

std::optional<IntVector> solve_mod2(const IntMatrix& a, const IntVector& b) {
  assert(a.rows() == b.size());
  Bits rows = to_bits(a, &b);
  const auto pivots = rref_mod2(rows, a.cols());
  for (std::size_t i = pivots.size(); i < rows.size(); ++i)
    if (rows[i][a.cols()] != 0) return std::nullopt;
  IntVector x(a.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = rows[r][a.cols()];
  return x;
}

}  // namespace gompf
