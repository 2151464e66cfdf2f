#pragma once

#include <cstddef>
#include <vector>

#include <omp.h>

namespace mps::kernels {

// Data-parallel inner loops shared by the whole solver. Reductions accumulate
// fixed-size block partials in block order, so results are bit-identical for
// any thread count (and for serial execution of the same blocked loop).
// kernels::serial holds straightforward reference implementations; tests
// compare the two and the benchmark target times them against each other.

inline constexpr std::size_t kBlock = 4096;
inline constexpr std::size_t kParallelCutoff = 1u << 15;

namespace serial {

double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double max_value(const double* a, std::size_t n);
double min_value(const double* a, std::size_t n);
void laplacian_1d(const double* u, double* out, std::size_t n, double inv_h2);
void laplacian_2d(const double* u, double* out, std::size_t n, double inv_h2);

}  // namespace serial

double dot(const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);
double max_value(const double* a, std::size_t n);
double min_value(const double* a, std::size_t n);

void laplacian_1d(const double* u, double* out, std::size_t n, double inv_h2);
void laplacian_2d(const double* u, double* out, std::size_t n, double inv_h2);

// y <- y + alpha*x
void axpy(double alpha, const double* x, double* y, std::size_t n);
// out <- a + alpha*b
void add_scaled(const double* a, double alpha, const double* b, double* out,
                std::size_t n);
void scale(double alpha, double* x, std::size_t n);
void fill(double v, double* x, std::size_t n);

/// out_i = fn(i, u_i) over all nodes. fn must be pure.
template <class Fn>
void transform(const double* u, double* out, std::size_t n, Fn fn) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    out[i] = fn(static_cast<std::size_t>(i), u[i]);
  }
}

/// Blocked sum of fn(i, u_i); deterministic for any thread count.
template <class Fn>
double sum_transform(const double* u, std::size_t n, Fn fn) {
  const std::size_t nb = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nb, 0.0);
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long bi = 0; bi < static_cast<long long>(nb); ++bi) {
    const std::size_t lo = static_cast<std::size_t>(bi) * kBlock;
    const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    double s = 0.0;
    for (std::size_t i = lo; i < hi; ++i) s += fn(i, u[i]);
    partial[static_cast<std::size_t>(bi)] = s;
  }
  double total = 0.0;
  for (double p : partial) total += p;
  return total;
}

}  // namespace mps::kernels
