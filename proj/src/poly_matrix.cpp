#include "ipgp/poly_matrix.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

namespace ipgp {

PolyMatrix::PolyMatrix(int dim) : dim_(dim) {
  if (dim < 1) throw std::invalid_argument("matrix dimension must be >= 1");
  entries_.resize(static_cast<size_t>(dim) * dim);
}

PolyMatrix PolyMatrix::identity(int dim) {
  PolyMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = IntPoly::constant(1);
  return m;
}

IntPoly PolyMatrix::trace() const {
  IntPoly t;
  for (int i = 0; i < dim_; ++i) t = t + at(i, i);
  return t;
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b, int threads) {
  if (a.dim() != b.dim()) throw std::invalid_argument("matrix dimension mismatch");
  const int d = a.dim();
  PolyMatrix out(d);

  auto compute_row = [&](int r) {
    for (int c = 0; c < d; ++c) {
      IntPoly acc;
      for (int m = 0; m < d; ++m) {
        const IntPoly& x = a.at(r, m);
        const IntPoly& y = b.at(m, c);
        if (x.is_zero() || y.is_zero()) continue;
        acc = acc + x * y;
      }
      out.at(r, c) = std::move(acc);
    }
  };

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  if (threads <= 1 || d < 4) {
    for (int r = 0; r < d; ++r) compute_row(r);
    return out;
  }

  std::atomic<int> next_row{0};
  std::vector<std::thread> pool;
  int nworkers = std::min(threads, d);
  pool.reserve(nworkers);
  for (int w = 0; w < nworkers; ++w) {
    pool.emplace_back([&] {
      for (int r = next_row.fetch_add(1); r < d; r = next_row.fetch_add(1)) compute_row(r);
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

IntPoly mat_pow_trace(const PolyMatrix& m, long n, int threads) {
  if (n < 1) throw std::invalid_argument("matrix power must be >= 1");
  PolyMatrix acc = PolyMatrix::identity(m.dim());
  PolyMatrix base = m;
  bool acc_is_identity = true;
  long e = n;
  while (e > 0) {
    if (e & 1) {
      acc = acc_is_identity ? base : mat_mul(acc, base, threads);
      acc_is_identity = false;
    }
    e >>= 1;
    if (e > 0) base = mat_mul(base, base, threads);
  }
  return acc.trace();
}

}  // namespace ipgp
