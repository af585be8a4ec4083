#pragma once

#include <string>
#include <vector>

#include "qgeom/logreal.hpp"
#include "qgeom/mathkernel.hpp"

namespace qgeom::feasibility {

// Matrix of prescribed squared inner-product moduli |<psi_j, psi_k>|^2 for a
// hypothetical collection of n unit vectors in C^d.
struct PrescriptionMatrix {
    int n = 0;
    int d = 0;
    std::vector<double> M; // n x n row-major, symmetric

    double at(int i, int j) const { return M[static_cast<size_t>(i) * n + j]; }
    double& at(int i, int j) { return M[static_cast<size_t>(i) * n + j]; }
};

struct Tolerances {
    double psd = 1e-9;   // lambda_min >= -psd * n * max|G|
    double rank = 1e-8;  // eigenvalues above rank * lambda_max count toward the rank
    double entry = 1e-12; // slack on the exact diagonal / nonnegativity checks
};

// Verdicts of the existence prerequisites on M: unit diagonal, nonnegative
// entries, positive semidefiniteness of G = M - J/d, rank(G) <= d^2 - 1,
// and the sum bound sum M >= n^2/d.  When G is PSD, gram_vectors holds n
// row vectors (length n) realizing G as their Gram matrix.
struct GramReport {
    bool diag_ok = false;
    bool nonneg_ok = false;
    bool psd_ok = false;
    double min_eigenvalue = 0.0;
    int rank = 0;
    double rank_threshold = 0.0;
    bool rank_ok = false;
    double sum = 0.0;
    double sum_bound = 0.0;
    bool sum_ok = false;
    std::vector<double> gram_vectors; // n x n row-major; empty unless psd_ok

    bool all_ok() const { return diag_ok && nonneg_ok && psd_ok && rank_ok && sum_ok; }
};

GramReport check_trivial_requirements(const PrescriptionMatrix& p, const Tolerances& tol = {});

struct SumBound {
    double sum = 0.0;
    double bound = 0.0;
    bool ok = false;
};
SumBound sum_bound(const PrescriptionMatrix& p);

enum class PrescriptionKind { Sic, Mub, OrthoSet };

// SIC: d^2 rows, off-diagonal 1/(d+1).  MUB: d(d+1) rows, zero within a
// basis block and 1/d across blocks.  OrthoSet: n x n identity (n defaults
// to d).
PrescriptionMatrix generate_prescription(PrescriptionKind kind, int d, int n = -1);

// Spherical cone C_{d, dim}: positive orthant of R^dim intersected with the
// ball of radius R_d = sqrt((d-1)/d); dim = D - k for k = 0..3.
struct ConeFamily {
    int d = 0;
    int k = 0;
    int dim = 0;
    double circumradius = 0.0;

    static ConeFamily make(int d, int k);
};

// V_dim(C) = chi_dim R_d^dim / 2^dim, the cone's top intrinsic volume.
LogReal cone_intrinsic_volume(const ConeFamily& f);

struct ExclusionRow {
    int k = 0;
    int dim = 0;
    LogReal cone_value;
    LogReal statespace_value;
    bool excluded = false; // cone value strictly larger
};
std::vector<ExclusionRow> exclusion_report(int d);

struct CompareRow {
    int N = 0;
    LogReal polytope_value;
    LogReal statespace_value;
    double ratio = 0.0; // V_N(P_d) / V_N(S_d)
    bool violates = false;
};
std::vector<CompareRow> compare_polytope_statespace(int d);

// Interchange: {"d": int, "M": [[...]]} documents, or a bare numeric CSV
// grid with d supplied separately.
PrescriptionMatrix load_prescription_json(const std::string& path);
PrescriptionMatrix parse_prescription_json(const std::string& text);
PrescriptionMatrix load_prescription_csv(const std::string& path, int d);
std::string gram_report_json(const PrescriptionMatrix& p, const GramReport& r);

} // namespace qgeom::feasibility
