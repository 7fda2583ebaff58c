#pragma once

#include <vector>

#include "secform/types.hpp"

namespace secform {

/// LU factorization with row pivoting, reusable across right-hand sides.
/// Throws precondition_error("singular matrix") when a pivot falls below
/// 1e-14 * max|T_ij|.
class LuFactor {
public:
  explicit LuFactor(const ComplexMatrix& T);

  ComplexVector solve(const ComplexVector& b) const;

  std::size_t size() const { return lu_.size(); }

private:
  ComplexMatrix lu_;
  std::vector<std::size_t> perm_;
};

/// One-shot solve T x = b.
ComplexVector solve(const ComplexMatrix& T, const ComplexVector& b);

}  // namespace secform
