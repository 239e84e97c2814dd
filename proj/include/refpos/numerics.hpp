#pragma once

// Shared numerical primitives: symmetric/Hermitian eigendecomposition,
// scale-relative PSD certification with explicit witnesses, and a
// Lawson-Hanson nonnegative least squares solver.
//
// All functions are pure and reentrant; matrices are passed by value or
// const reference and never modified in place.

#include <Eigen/Dense>

#include <complex>
#include <optional>

namespace refpos {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;

// Symmetry is required up to |A(i,j) - A(j,i)| <= kSymTol * max(1, ||A||_inf).
inline constexpr double kSymTol = 1e-12;

// Throws std::invalid_argument naming the worst offending entry pair.
void require_symmetric(const Matrix& A);
void require_hermitian(const CMatrix& A);

// Throws std::invalid_argument on NaN or Inf entries. A non-finite Gram
// usually means a singular kernel was evaluated on the diagonal.
void require_finite(const Matrix& A);
void require_finite(const CMatrix& A);

struct MinEig {
  double value;   // algebraically smallest eigenvalue
  Vector vector;  // unit-norm eigenvector
};

// Dense symmetric eigensolve; residual ||Av - lambda v|| <= 1e-9 ||A||.
MinEig sym_eig_min(const Matrix& A);

// All eigenvalues in ascending order.
Vector sym_eigenvalues(const Matrix& A);
Vector herm_eigenvalues(const CMatrix& A);

// Scale-relative PSD decision: is_psd iff min eig >= -tol * max|eig|.
// The relative form keeps the decision meaningful for kernels whose
// Grams span many orders of magnitude.
struct PsdVerdict {
  bool is_psd = true;
  double min_eigenvalue = 0.0;
  double scale = 0.0;                // largest |eigenvalue|
  std::optional<Vector> witness;     // unit v with v^T A v < -tol*scale, iff !is_psd
};

struct HermPsdVerdict {
  bool is_psd = true;
  double min_eigenvalue = 0.0;
  double scale = 0.0;
  std::optional<CVector> witness;
};

PsdVerdict psd_check(const Matrix& A, double tol = 1e-10);
HermPsdVerdict psd_check(const CMatrix& A, double tol = 1e-10);

// argmin ||Ax - b||_2 subject to x >= 0, by the Lawson-Hanson active set
// method. Ties in the entering-variable selection are broken toward the
// lowest column index so the solve is deterministic. KKT residual at
// convergence is below 1e-8 * ||b||.
Vector nnls(const Matrix& A, const Vector& b);

}  // namespace refpos
