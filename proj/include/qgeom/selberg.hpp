#pragma once

#include "qgeom/logreal.hpp"

namespace qgeom::selberg {

// Parameters of the Selberg-type integral with weight
//   Phi(x) = prod_{i<j} (x_i - x_j)^{2 gamma} prod_i x_i^{alpha-1} e^{-x_i}
// and monomial prefix x_1^2 ... x_k^2 x_{k+1} ... x_m.
//
// The product formulas are stated for n > 1; n = 1 is accepted here with
// the empty-product convention (no pair factors), which the closed form
// reproduces consistently and which the state-space assembly needs at d = 2.
struct SelbergParams {
    int n = 2;
    double alpha = 1.0;
    double gamma = 1.0;
    int k = 0;
    int m = 0;

    void validate() const;
    // degree of the full integrand: m + k + n*(alpha - 1 + gamma*(n-1))
    double homogeneity_degree() const;
};

// Integral over [0, inf)^n of the monomial prefix times Phi, by the
// Laguerre-type Selberg product formula; k = m = 0 gives the bare value.
LogReal selberg_laguerre(const SelbergParams& p);

// Same integrand restricted to the standard (n-1)-simplex (with the induced
// Lebesgue measure, carrying the sqrt(n) factor).
LogReal simplex_selberg(const SelbergParams& p);

// Coarea-type conversion: I_simplex = sqrt(n)/Gamma(n + k) * I_exponential
// for a homogeneous integrand of degree h_degree.
LogReal simplex_integral_via_exponential(int h_degree, const LogReal& exponential_value, int n);

// Brute-force numerical integration over the standard simplex:
// tensor Gauss-Legendre grids for n in {2, 3}, fixed-seed Monte Carlo
// (1e7 samples) for n = 4.  Intended as an independent oracle for small
// integer parameters; throws for other n.
double simplex_quadrature_oracle(const SelbergParams& p);

} // namespace qgeom::selberg
