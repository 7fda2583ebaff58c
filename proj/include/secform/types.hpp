#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace secform {

using cplx = std::complex<double>;

/// Invalid parameters or malformed input. Mapped to CLI exit code 2.
class domain_error : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// A mathematical precondition failed on otherwise well-formed input
/// (non-elliptic field, non-coercive matrix, singular system).
/// Mapped to CLI exit code 3.
class precondition_error : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

using ComplexVector = std::vector<cplx>;

/// Dense square complex matrix, row-major.
class ComplexMatrix {
public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t n) : n_(n), a_(n * n, cplx{0.0, 0.0}) {}
  ComplexMatrix(std::size_t n, std::vector<cplx> entries) : n_(n), a_(std::move(entries)) {
    if (a_.size() != n_ * n_)
      throw domain_error("ComplexMatrix: entry count " + std::to_string(a_.size()) +
                         " does not match dimension " + std::to_string(n_));
  }

  static ComplexMatrix identity(std::size_t n) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  std::size_t size() const { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  const std::vector<cplx>& entries() const { return a_; }

private:
  std::size_t n_ = 0;
  std::vector<cplx> a_;
};

// --- elementwise arithmetic ---

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);

/// Matrix product a*b.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

/// a*x.
ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x);

/// Inner product (x, y) = sum_i x_i * conj(y_i).
cplx dot(const ComplexVector& x, const ComplexVector& y);

/// Euclidean norm.
double norm2(const ComplexVector& x);

/// Largest entry modulus.
double max_abs(const ComplexMatrix& a);

/// Frobenius norm.
double frobenius(const ComplexMatrix& a);

/// True when every entry is finite (no NaN, no Inf).
bool all_finite(const ComplexMatrix& a);
bool all_finite(const ComplexVector& x);

/// Throws domain_error when a non-finite entry is present.
void require_finite(const ComplexMatrix& a, const char* who);

}  // namespace secform
