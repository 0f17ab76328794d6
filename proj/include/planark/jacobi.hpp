#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace planark {

/// Eigenvalues of a real symmetric n x n matrix (row-major) via cyclic Jacobi
/// rotations. Sweeps until the off-diagonal Frobenius norm drops below `tol`
/// or `max_sweeps` is reached. Returned ascending.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, std::size_t n,
                                       double tol = 1e-12, int max_sweeps = 100);

/// Eigenvalues of a Hermitian n x n matrix via the real symmetric embedding
/// [[X, -Y], [Y, X]] of H = X + iY, whose spectrum is that of H doubled.
/// Returned ascending, one copy per eigenvalue of H.
std::vector<double> hermitian_eigenvalues(
    const std::vector<std::complex<double>>& matrix, std::size_t n,
    double tol = 1e-12, int max_sweeps = 100);

}  // namespace planark
