#pragma once

#include <complex>
#include <vector>

#include "ddescan/polynomial.hpp"
#include "ddescan/system.hpp"

namespace ddescan {

/// One probe of the characteristic function: lambda, the delay it was
/// evaluated at, and the achieved residual |chi(lambda)|.
struct CharRootProbe {
    Complex lambda;
    double tau = 0.0;
    double residual = 0.0;
};

/// chi(lambda) = det[lambda I - A - B e^{-lambda tau}], by complex LU.
Complex eval_char(const LinearDDE& sys, double tau, Complex lambda);

/// d(chi)/d(lambda) via Jacobi's identity chi' = chi * tr(M^{-1} M') with
/// M = lambda I - A - B e^{-lambda tau}. Returns the pair (chi, chi').
std::pair<Complex, Complex> eval_char_with_derivative(const LinearDDE& sys, double tau,
                                                      Complex lambda);

/// Coefficients of p_omega(Y) = det[i omega I - A - B Y], recovered by
/// interpolation at n+1 points on the circle |Y| = 2 (exact for polynomials,
/// works for any dimension). Coefficients below 1e-12 of the largest are
/// truncated before the degree is fixed.
ComplexPolynomial generating_polynomial(const LinearDDE& sys, double omega);

/// All roots Y_j of the generating polynomial at this frequency.
/// Throws DegenerateFrequency when p_omega is identically constant.
std::vector<Complex> generating_roots(const LinearDDE& sys, double omega);

/// Purely imaginary eigenvalues of A whose eigenvectors lie in ker B. These
/// are characteristic roots for every delay and never move; they are reported
/// apart from the delay-induced crossings.
std::vector<Complex> delay_independent_roots(const LinearDDE& sys);

}  // namespace ddescan
