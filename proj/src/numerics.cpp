#include "refpos/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace refpos {

namespace {

double inf_norm(const Matrix& A) { return A.cwiseAbs().rowwise().sum().maxCoeff(); }

}  // namespace

void require_symmetric(const Matrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("require_symmetric: matrix is not square");
  const double bound = kSymTol * std::max(1.0, inf_norm(A));
  double worst = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = i + 1; j < A.cols(); ++j) {
      const double d = std::abs(A(i, j) - A(j, i));
      if (d > worst) { worst = d; wi = i; wj = j; }
    }
  if (worst > bound) {
    std::ostringstream os;
    os << "matrix is not symmetric: |A(" << wi << "," << wj << ") - A(" << wj << "," << wi
       << ")| = " << worst << " exceeds " << bound;
    throw std::invalid_argument(os.str());
  }
}

void require_hermitian(const CMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("require_hermitian: matrix is not square");
  const double bound = kSymTol * std::max(1.0, A.cwiseAbs().rowwise().sum().maxCoeff());
  double worst = 0.0;
  int wi = 0, wj = 0;
  for (int i = 0; i < A.rows(); ++i)
    for (int j = i; j < A.cols(); ++j) {
      const double d = std::abs(A(i, j) - std::conj(A(j, i)));
      if (d > worst) { worst = d; wi = i; wj = j; }
    }
  if (worst > bound) {
    std::ostringstream os;
    os << "matrix is not Hermitian: |A(" << wi << "," << wj << ") - conj(A(" << wj << "," << wi
       << "))| = " << worst << " exceeds " << bound;
    throw std::invalid_argument(os.str());
  }
}

void require_finite(const Matrix& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!std::isfinite(A(i, j))) {
        std::ostringstream os;
        os << "non-finite entry A(" << i << "," << j
           << "); a singular kernel was likely evaluated on the diagonal";
        throw std::invalid_argument(os.str());
      }
}

void require_finite(const CMatrix& A) {
  for (int i = 0; i < A.rows(); ++i)
    for (int j = 0; j < A.cols(); ++j)
      if (!std::isfinite(A(i, j).real()) || !std::isfinite(A(i, j).imag())) {
        std::ostringstream os;
        os << "non-finite entry A(" << i << "," << j
           << "); a singular kernel was likely evaluated on the diagonal";
        throw std::invalid_argument(os.str());
      }
}

MinEig sym_eig_min(const Matrix& A) {
  require_finite(A);
  require_symmetric(A);
  Eigen::SelfAdjointEigenSolver<Matrix> es(A);
  if (es.info() != Eigen::Success) throw std::runtime_error("sym_eig_min: eigensolver failed");
  return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

Vector sym_eigenvalues(const Matrix& A) {
  require_finite(A);
  require_symmetric(A);
  Eigen::SelfAdjointEigenSolver<Matrix> es(A, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("sym_eigenvalues: eigensolver failed");
  return es.eigenvalues();
}

Vector herm_eigenvalues(const CMatrix& A) {
  require_finite(A);
  require_hermitian(A);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(A, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("herm_eigenvalues: eigensolver failed");
  return es.eigenvalues();
}

PsdVerdict psd_check(const Matrix& A, double tol) {
  if (tol <= 0) throw std::invalid_argument("psd_check: tol must be positive");
  require_finite(A);
  require_symmetric(A);
  Eigen::SelfAdjointEigenSolver<Matrix> es(A);
  if (es.info() != Eigen::Success) throw std::runtime_error("psd_check: eigensolver failed");
  PsdVerdict v;
  v.min_eigenvalue = es.eigenvalues()(0);
  v.scale = std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(A.rows() - 1)));
  v.is_psd = v.min_eigenvalue >= -tol * v.scale;
  if (!v.is_psd) v.witness = es.eigenvectors().col(0);
  return v;
}

HermPsdVerdict psd_check(const CMatrix& A, double tol) {
  if (tol <= 0) throw std::invalid_argument("psd_check: tol must be positive");
  require_finite(A);
  require_hermitian(A);
  Eigen::SelfAdjointEigenSolver<CMatrix> es(A);
  if (es.info() != Eigen::Success) throw std::runtime_error("psd_check: eigensolver failed");
  HermPsdVerdict v;
  v.min_eigenvalue = es.eigenvalues()(0);
  v.scale = std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(A.rows() - 1)));
  v.is_psd = v.min_eigenvalue >= -tol * v.scale;
  if (!v.is_psd) v.witness = es.eigenvectors().col(0);
  return v;
}

Vector nnls(const Matrix& A, const Vector& b) {
  if (A.rows() != b.size())
    throw std::invalid_argument("nnls: A has " + std::to_string(A.rows()) + " rows but b has " +
                                std::to_string(b.size()) + " entries");
  const int m = static_cast<int>(A.rows());
  const int n = static_cast<int>(A.cols());
  Vector x = Vector::Zero(n);
  std::vector<bool> passive(n, false);
  const double entry_tol = 1e-12 * std::max(1.0, (A.transpose() * b).cwiseAbs().maxCoeff());

  // Outer loop: move the most violated KKT coordinate into the passive set.
  for (int outer = 0; outer < 3 * n + 30; ++outer) {
    Vector w = A.transpose() * (b - A * x);
    int best = -1;
    double best_w = entry_tol;
    for (int j = 0; j < n; ++j)
      if (!passive[j] && w(j) > best_w) { best_w = w(j); best = j; }  // strict > keeps lowest index on ties
    if (best < 0) break;
    passive[best] = true;

    // Inner loop: unconstrained solve on the passive set, stepping back
    // along the segment to x whenever a passive coordinate goes negative.
    for (int inner = 0; inner < 3 * n + 30; ++inner) {
      std::vector<int> idx;
      for (int j = 0; j < n; ++j)
        if (passive[j]) idx.push_back(j);
      Matrix Ap(m, idx.size());
      for (size_t k = 0; k < idx.size(); ++k) Ap.col(k) = A.col(idx[k]);
      Vector z = Ap.colPivHouseholderQr().solve(b);

      bool feasible = true;
      for (size_t k = 0; k < idx.size(); ++k)
        if (z(k) <= 0) { feasible = false; break; }
      if (feasible) {
        x.setZero();
        for (size_t k = 0; k < idx.size(); ++k) x(idx[k]) = z(k);
        break;
      }
      double alpha = 1.0;
      for (size_t k = 0; k < idx.size(); ++k) {
        if (z(k) <= 0) {
          const double xi = x(idx[k]);
          if (xi - z(k) > 0) alpha = std::min(alpha, xi / (xi - z(k)));
        }
      }
      for (size_t k = 0; k < idx.size(); ++k) x(idx[k]) += alpha * (z(k) - x(idx[k]));
      for (size_t k = 0; k < idx.size(); ++k)
        if (x(idx[k]) <= 1e-14) { x(idx[k]) = 0.0; passive[idx[k]] = false; }
    }
  }
  return x;
}

}  // namespace refpos
