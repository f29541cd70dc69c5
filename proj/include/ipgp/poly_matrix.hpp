#pragma once

#include <vector>

#include "ipgp/int_poly.hpp"

namespace ipgp {

/// Square matrix of IntPoly entries with exact arithmetic.
class PolyMatrix {
 public:
  explicit PolyMatrix(int dim);
  static PolyMatrix identity(int dim);

  int dim() const { return dim_; }
  IntPoly& at(int row, int col) { return entries_[row * dim_ + col]; }
  const IntPoly& at(int row, int col) const { return entries_[row * dim_ + col]; }

  IntPoly trace() const;

  bool operator==(const PolyMatrix&) const = default;

 private:
  int dim_ = 0;
  std::vector<IntPoly> entries_;  // row-major
};

// Exact matrix product. Throws std::invalid_argument on dimension mismatch.
// With threads > 1 the output rows are computed in parallel; the result is
// identical for every thread count.
PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, int threads = 1);

// Tr(m^n) for n >= 1, by binary exponentiation.
IntPoly mat_pow_trace(const PolyMatrix& m, long n, int threads = 1);

}  // namespace ipgp
