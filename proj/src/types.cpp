#include "secform/types.hpp"

#include <cmath>

namespace secform {

static void require_same_size(const ComplexMatrix& a, const ComplexMatrix& b, const char* who) {
  if (a.size() != b.size()) throw domain_error(std::string(who) + ": dimension mismatch");
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b, "operator+");
  ComplexMatrix r(a.size());
  const std::size_t nn = a.size() * a.size();
  for (std::size_t k = 0; k < nn; ++k) r.data()[k] = a.data()[k] + b.data()[k];
  return r;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b, "operator-");
  ComplexMatrix r(a.size());
  const std::size_t nn = a.size() * a.size();
  for (std::size_t k = 0; k < nn; ++k) r.data()[k] = a.data()[k] - b.data()[k];
  return r;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
  ComplexMatrix r(a.size());
  const std::size_t nn = a.size() * a.size();
  for (std::size_t k = 0; k < nn; ++k) r.data()[k] = s * a.data()[k];
  return r;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_size(a, b, "matmul");
  const std::size_t n = a.size();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  const std::size_t n = a.size();
  ComplexMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexVector matvec(const ComplexMatrix& a, const ComplexVector& x) {
  const std::size_t n = a.size();
  if (x.size() != n) throw domain_error("matvec: dimension mismatch");
  ComplexVector y(n, cplx{0.0, 0.0});
  for (std::size_t i = 0; i < n; ++i) {
    cplx s{0.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) s += a(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

cplx dot(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw domain_error("dot: dimension mismatch");
  cplx s{0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

double norm2(const ComplexVector& x) {
  double s = 0.0;
  for (const cplx& v : x) s += std::norm(v);
  return std::sqrt(s);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  const std::size_t nn = a.size() * a.size();
  for (std::size_t k = 0; k < nn; ++k) m = std::max(m, std::abs(a.data()[k]));
  return m;
}

double frobenius(const ComplexMatrix& a) {
  double s = 0.0;
  const std::size_t nn = a.size() * a.size();
  for (std::size_t k = 0; k < nn; ++k) s += std::norm(a.data()[k]);
  return std::sqrt(s);
}

bool all_finite(const ComplexMatrix& a) {
  const std::size_t nn = a.size() * a.size();
  for (std::size_t k = 0; k < nn; ++k) {
    const cplx& v = a.data()[k];
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  }
  return true;
}

bool all_finite(const ComplexVector& x) {
  for (const cplx& v : x)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

void require_finite(const ComplexMatrix& a, const char* who) {
  if (!all_finite(a)) throw domain_error(std::string(who) + ": non-finite matrix entry");
}

}  // namespace secform
