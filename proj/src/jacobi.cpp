#include "planark/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace planark {

namespace {

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = a[i * n + j];
      sum += 2.0 * v * v;
    }
  }
  return std::sqrt(sum);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(std::vector<double> a, std::size_t n,
                                       double tol, int max_sweeps) {
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    if (off_diagonal_norm(a, n) <= tol) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        for (std::size_t i = 0; i < n; ++i) {
          const double aip = a[i * n + p];
          const double aiq = a[i * n + q];
          a[i * n + p] = c * aip - s * aiq;
          a[i * n + q] = s * aip + c * aiq;
        }
        for (std::size_t j = 0; j < n; ++j) {
          const double apj = a[p * n + j];
          const double aqj = a[q * n + j];
          a[p * n + j] = c * apj - s * aqj;
          a[q * n + j] = s * apj + c * aqj;
        }
      }
    }
  }
  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = a[i * n + i];
  std::sort(eigenvalues.begin(), eigenvalues.end());
  return eigenvalues;
}

std::vector<double> hermitian_eigenvalues(
    const std::vector<std::complex<double>>& h, std::size_t n, double tol,
    int max_sweeps) {
  const std::size_t m = 2 * n;
  std::vector<double> embedded(m * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double re = h[i * n + j].real();
      const double im = h[i * n + j].imag();
      embedded[i * m + j] = re;
      embedded[(i + n) * m + (j + n)] = re;
      embedded[i * m + (j + n)] = -im;
      embedded[(i + n) * m + j] = im;
    }
  }
  std::vector<double> doubled = jacobi_eigenvalues(std::move(embedded), m, tol,
                                                   max_sweeps);
  // Every eigenvalue of H appears exactly twice in the embedding.
  std::vector<double> eigenvalues(n);
  for (std::size_t i = 0; i < n; ++i) eigenvalues[i] = doubled[2 * i];
  return eigenvalues;
}

}  // namespace planark
