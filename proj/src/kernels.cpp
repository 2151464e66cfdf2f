#include "mps/kernels.hpp"

#include <algorithm>
#include <limits>

namespace mps::kernels {

namespace serial {

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum(const double* a, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i];
  return s;
}

double max_value(const double* a, std::size_t n) {
  double m = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::max(m, a[i]);
  return m;
}

double min_value(const double* a, std::size_t n) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) m = std::min(m, a[i]);
  return m;
}

void laplacian_1d(const double* u, double* out, std::size_t n, double inv_h2) {
  out[0] = 0.0;
  out[n - 1] = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = (2.0 * u[i] - u[i - 1] - u[i + 1]) * inv_h2;
  }
}

void laplacian_2d(const double* u, double* out, std::size_t n, double inv_h2) {
  for (std::size_t iy = 0; iy < n; ++iy) {
    out[iy] = 0.0;
    out[(n - 1) * n + iy] = 0.0;
  }
  for (std::size_t ix = 1; ix + 1 < n; ++ix) {
    double* row = out + ix * n;
    const double* u0 = u + ix * n;
    row[0] = 0.0;
    row[n - 1] = 0.0;
    for (std::size_t iy = 1; iy + 1 < n; ++iy) {
      row[iy] = (4.0 * u0[iy] - u0[iy - 1] - u0[iy + 1] - u0[iy - n] -
                 u0[iy + n]) *
                inv_h2;
    }
  }
}

}  // namespace serial

namespace {

template <class BlockFn>
double blocked_reduce(std::size_t n, double init, BlockFn block_fn,
                      bool maximum) {
  const std::size_t nb = (n + kBlock - 1) / kBlock;
  std::vector<double> partial(nb, init);
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long bi = 0; bi < static_cast<long long>(nb); ++bi) {
    const std::size_t lo = static_cast<std::size_t>(bi) * kBlock;
    const std::size_t hi = lo + kBlock < n ? lo + kBlock : n;
    partial[static_cast<std::size_t>(bi)] = block_fn(lo, hi);
  }
  double total = init;
  if (maximum) {
    for (double p : partial) total = std::max(total, p);
  } else {
    for (double p : partial) total += p;
  }
  return total;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) {
  return blocked_reduce(
      n, 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i] * b[i];
        return s;
      },
      false);
}

double sum(const double* a, std::size_t n) {
  return blocked_reduce(
      n, 0.0,
      [&](std::size_t lo, std::size_t hi) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += a[i];
        return s;
      },
      false);
}

double max_value(const double* a, std::size_t n) {
  return blocked_reduce(
      n, -std::numeric_limits<double>::infinity(),
      [&](std::size_t lo, std::size_t hi) {
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, a[i]);
        return m;
      },
      true);
}

double min_value(const double* a, std::size_t n) {
  return -blocked_reduce(
      n, -std::numeric_limits<double>::infinity(),
      [&](std::size_t lo, std::size_t hi) {
        double m = -std::numeric_limits<double>::infinity();
        for (std::size_t i = lo; i < hi; ++i) m = std::max(m, -a[i]);
        return m;
      },
      true);
}

void laplacian_1d(const double* u, double* out, std::size_t n, double inv_h2) {
  out[0] = 0.0;
  out[n - 1] = 0.0;
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long i = 1; i < static_cast<long long>(n) - 1; ++i) {
    out[i] = (2.0 * u[i] - u[i - 1] - u[i + 1]) * inv_h2;
  }
}

void laplacian_2d(const double* u, double* out, std::size_t n, double inv_h2) {
  for (std::size_t iy = 0; iy < n; ++iy) {
    out[iy] = 0.0;
    out[(n - 1) * n + iy] = 0.0;
  }
#pragma omp parallel for schedule(static) if (n * n >= kParallelCutoff)
  for (long long ix = 1; ix < static_cast<long long>(n) - 1; ++ix) {
    double* row = out + static_cast<std::size_t>(ix) * n;
    const double* u0 = u + static_cast<std::size_t>(ix) * n;
    row[0] = 0.0;
    row[n - 1] = 0.0;
    for (std::size_t iy = 1; iy + 1 < n; ++iy) {
      row[iy] = (4.0 * u0[iy] - u0[iy - 1] - u0[iy + 1] - u0[iy - n] -
                 u0[iy + n]) *
                inv_h2;
    }
  }
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    y[i] += alpha * x[i];
  }
}

void add_scaled(const double* a, double alpha, const double* b, double* out,
                std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    out[i] = a[i] + alpha * b[i];
  }
}

void scale(double alpha, double* x, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    x[i] *= alpha;
  }
}

void fill(double v, double* x, std::size_t n) {
#pragma omp parallel for schedule(static) if (n >= kParallelCutoff)
  for (long long i = 0; i < static_cast<long long>(n); ++i) {
    x[i] = v;
  }
}

}  // namespace mps::kernels
