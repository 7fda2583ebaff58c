#pragma once

#include <vector>

#include "secform/types.hpp"

namespace secform {

/// Eigendecomposition of a Hermitian matrix: H = V diag(values) V^H.
struct HermitianEigen {
  std::vector<double> values;  ///< ascending
  ComplexMatrix vectors;       ///< column k is a unit eigenvector for values[k]

  ComplexVector eigenvector(std::size_t k) const {
    const std::size_t n = vectors.size();
    ComplexVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = vectors(i, k);
    return v;
  }
};

/// Full eigendecomposition by cyclic Jacobi rotations.
///
/// The input must be Hermitian within 1e-12 * max|H_ij|; it is symmetrized
/// to (H + H^H)/2 before iterating. Convergence: off-diagonal Frobenius
/// mass <= 1e-13 * ||H||_F, capped at 60 sweeps. For a degenerate
/// eigenvalue the returned eigenvectors are an arbitrary orthonormal basis
/// of the eigenspace.
HermitianEigen hermitian_eigs(const ComplexMatrix& H);

/// Eigenvalues only (ascending); skips eigenvector accumulation.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& H);

/// Largest singular value, computed as sqrt(lambda_max(T^H T)).
double operator_norm(const ComplexMatrix& T);

/// Smallest singular value, sqrt(max(0, lambda_min(T^H T))).
double smallest_singular(const ComplexMatrix& T);

}  // namespace secform
