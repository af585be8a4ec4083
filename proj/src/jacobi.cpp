#include "qgeom/jacobi.hpp"

#include <algorithm>
#include <cmath>

namespace qgeom {

namespace {

double off_norm_real(const double* A, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += 2.0 * A[p * n + q] * A[p * n + q];
    return std::sqrt(s);
}

double fro_norm_real(const double* A, int n) {
    double s = 0.0;
    for (int i = 0; i < n * n; ++i) s += A[i] * A[i];
    return std::sqrt(s);
}

double off_norm_herm(const std::complex<double>* A, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += 2.0 * std::norm(A[p * n + q]);
    return std::sqrt(s);
}

double fro_norm_herm(const std::complex<double>* A, int n) {
    double s = 0.0;
    for (int i = 0; i < n * n; ++i) s += std::norm(A[i]);
    return std::sqrt(s);
}

} // namespace

int jacobi_symmetric(double* A, int n, double* w, double* V, double tol, int max_sweeps) {
    if (V) {
        for (int i = 0; i < n * n; ++i) V[i] = 0.0;
        for (int i = 0; i < n; ++i) V[i * n + i] = 1.0;
    }
    double scale = fro_norm_real(A, n);
    if (scale == 0.0) scale = 1.0;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_norm_real(A, n) <= tol * scale) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = A[p * n + q];
                if (apq == 0.0) continue;
                double app = A[p * n + p];
                double aqq = A[q * n + q];
                double theta = 0.5 * std::atan2(2.0 * apq, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                for (int k = 0; k < n; ++k) {
                    double akp = A[k * n + p], akq = A[k * n + q];
                    A[k * n + p] = c * akp + s * akq;
                    A[k * n + q] = -s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = A[p * n + k], aqk = A[q * n + k];
                    A[p * n + k] = c * apk + s * aqk;
                    A[q * n + k] = -s * apk + c * aqk;
                }
                if (V) {
                    // accumulate R^T on the left so rows of V end up as eigenvectors
                    for (int k = 0; k < n; ++k) {
                        double vpk = V[p * n + k], vqk = V[q * n + k];
                        V[p * n + k] = c * vpk + s * vqk;
                        V[q * n + k] = -s * vpk + c * vqk;
                    }
                }
            }
        }
    }
    if (sweep == max_sweeps && off_norm_real(A, n) > tol * scale) return -1;

    for (int i = 0; i < n; ++i) w[i] = A[i * n + i];
    // ascending order, permuting eigenvector rows along
    for (int i = 0; i < n; ++i) {
        int m = i;
        for (int j = i + 1; j < n; ++j)
            if (w[j] < w[m]) m = j;
        if (m != i) {
            std::swap(w[i], w[m]);
            if (V)
                for (int k = 0; k < n; ++k) std::swap(V[i * n + k], V[m * n + k]);
        }
    }
    return sweep;
}

int jacobi_hermitian(std::complex<double>* A, int n, double* w, double tol, int max_sweeps) {
    using cd = std::complex<double>;
    double scale = fro_norm_herm(A, n);
    if (scale == 0.0) scale = 1.0;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_norm_herm(A, n) <= tol * scale) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cd apq = A[p * n + q];
                double r = std::abs(apq);
                if (r == 0.0) continue;
                cd phase = apq / r; // e^{i phi}
                double app = A[p * n + p].real();
                double aqq = A[q * n + q].real();
                double theta = 0.5 * std::atan2(2.0 * r, app - aqq);
                double c = std::cos(theta), s = std::sin(theta);
                // unitary J with J_pp = c, J_qp = s e^{-i phi}, J_pq = -s e^{i phi}, J_qq = c
                cd sp = s * std::conj(phase);
                cd sm = s * phase;
                for (int k = 0; k < n; ++k) { // A <- A J
                    cd akp = A[k * n + p], akq = A[k * n + q];
                    A[k * n + p] = c * akp + sp * akq;
                    A[k * n + q] = -sm * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) { // A <- J^H A
                    cd apk = A[p * n + k], aqk = A[q * n + k];
                    A[p * n + k] = c * apk + sm * aqk;
                    A[q * n + k] = -sp * apk + c * aqk;
                }
            }
        }
    }
    if (sweep == max_sweeps && off_norm_herm(A, n) > tol * scale) return -1;

    for (int i = 0; i < n; ++i) w[i] = A[i * n + i].real();
    std::sort(w, w + n);
    return sweep;
}

} // namespace qgeom
