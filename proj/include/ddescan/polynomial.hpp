#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "ddescan/system.hpp"

namespace ddescan {

/// Dense univariate polynomial sum_k c_k Y^k with complex coefficients.
///
/// Coefficients are stored lowest degree first. `degenerate` marks the case
/// where every coefficient of positive degree vanished after truncation, i.e.
/// the polynomial is identically a constant.
struct ComplexPolynomial {
    Eigen::VectorXcd coeffs;
    bool degenerate = false;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Complex eval(Complex y) const {
        Complex acc(0.0, 0.0);
        for (Eigen::Index k = coeffs.size() - 1; k >= 0; --k) acc = acc * y + coeffs[k];
        return acc;
    }

    Complex eval_derivative(Complex y) const {
        Complex acc(0.0, 0.0);
        for (Eigen::Index k = coeffs.size() - 1; k >= 1; --k)
            acc = acc * y + coeffs[k] * static_cast<double>(k);
        return acc;
    }

    double coeff_scale() const { return coeffs.size() ? coeffs.cwiseAbs().maxCoeff() : 0.0; }
};

/// Drop coefficients below rel_tol * max|c_k|, shrink to the true degree and
/// set the degenerate flag when only the constant survives.
ComplexPolynomial trim_polynomial(const Eigen::VectorXcd& raw, double rel_tol = 1e-12);

/// All roots of p, |p(root)| <= rel_residual * max|c_k| each.
///
/// Degrees 1 and 2 use closed forms; higher degrees run Ehrlich-Aberth
/// simultaneous iteration from a perturbed circle, with Newton polish.
std::vector<Complex> polynomial_roots(const ComplexPolynomial& p, double rel_residual = 1e-10);

}  // namespace ddescan
