#pragma once

#include <complex>
#include <cstddef>

namespace qgeom {

// Cyclic Jacobi eigensolver for a real symmetric matrix.
// A: n x n row-major, destroyed. w: eigenvalues, ascending.
// V (optional): n x n row-major, rows become the corresponding eigenvectors.
// Iterates full sweeps until the off-diagonal Frobenius norm drops below
// tol * ||A||_F.  Returns the number of sweeps used, or -1 on
// non-convergence within max_sweeps.
int jacobi_symmetric(double* A, int n, double* w, double* V = nullptr,
                     double tol = 1e-12, int max_sweeps = 100);

// Same for a complex Hermitian matrix; eigenvalues only.
int jacobi_hermitian(std::complex<double>* A, int n, double* w,
                     double tol = 1e-12, int max_sweeps = 100);

} // namespace qgeom
