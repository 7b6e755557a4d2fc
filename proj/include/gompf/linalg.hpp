#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gompf/matrix.hpp"
#include "gompf/rational.hpp"

// Exact integer and rational linear algebra. Nothing in here touches floating
// point; every routine is a pure function of its arguments.

namespace gompf {

/// U * A * V = D with U, V unimodular and D = diag(d_1, ..., d_r, 0, ...),
/// d_i > 0 and d_1 | d_2 | ... | d_r.
struct SnfResult {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;

  /// Number of nonzero diagonal entries.
  std::size_t rank() const;
};

/// Smith normal form by repeated smallest-|entry| pivoting. Ties among equal
/// pivots go to the lowest row, then the lowest column, so U and V are
/// reproducible.
SnfResult smith_normal_form(const IntMatrix& a);

struct RationalSolve {
  std::optional<RatVector> solution;  // absent when b is not in the column space
  std::vector<RatVector> kernel;      // basis of {x : A x = 0} over Q
};

/// Solves A x = b over Q by Gauss-Jordan elimination. Free variables are set to
/// zero in the returned particular solution.
RationalSolve solve_rational(const IntMatrix& a, const IntVector& b);
RationalSolve solve_rational(const RatMatrix& a, const RatVector& b);

std::size_t rank(const IntMatrix& a);

struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long long value() const { return static_cast<long long>(n_plus) - static_cast<long long>(n_minus); }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

/// Inertia of a symmetric integer matrix via congruence diagonalization over Q.
/// Throws DomainError(NotSymmetric) otherwise.
SignatureTriple signature(const IntMatrix& s);

/// Saturated basis of the integer kernel lattice, read off the SNF column
/// transform. Each vector has a positive first nonzero entry.
std::vector<IntVector> kernel_basis(const IntMatrix& a);

/// Inverse of a unimodular integer matrix (|det| = 1).
IntMatrix unimodular_inverse(const IntMatrix& u);

Integer determinant(const IntMatrix& a);

// Linear algebra over F_2. Entries are read mod 2.
std::size_t rank_mod2(const IntMatrix& a);

/// One solution of A x = b over F_2 with free variables zero, entries in {0,1}.
std::optional<IntVector> solve_mod2(const IntMatrix& a, const IntVector& b);

}  // namespace gompf
