#include "ddescan/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace ddescan {

ComplexPolynomial trim_polynomial(const Eigen::VectorXcd& raw, double rel_tol) {
    ComplexPolynomial p;
    const double scale = raw.size() ? raw.cwiseAbs().maxCoeff() : 0.0;
    Eigen::VectorXcd coeffs = raw;
    for (Eigen::Index k = 0; k < coeffs.size(); ++k)
        if (std::abs(coeffs[k]) < rel_tol * scale) coeffs[k] = Complex(0.0, 0.0);

    Eigen::Index deg = coeffs.size() - 1;
    while (deg > 0 && coeffs[deg] == Complex(0.0, 0.0)) --deg;
    p.coeffs = coeffs.head(deg + 1);
    p.degenerate = (deg == 0);
    return p;
}

namespace {

std::vector<Complex> quadratic_roots(Complex c0, Complex c1, Complex c2) {
    // numerically stable form: q = -(c1 + sign * sqrt(disc)) / 2, roots q/c2 and c0/q
    const Complex disc = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
    const Complex q = (std::real(std::conj(c1) * disc) >= 0.0) ? -0.5 * (c1 + disc)
                                                               : -0.5 * (c1 - disc);
    if (std::abs(q) == 0.0) return {Complex(0.0, 0.0), Complex(0.0, 0.0)};
    return {q / c2, c0 / q};
}

// Ehrlich-Aberth simultaneous iteration. Assumes degree >= 3 and a nonzero
// leading coefficient.
std::vector<Complex> aberth_roots(const ComplexPolynomial& p, double abs_residual) {
    const int d = p.degree();
    // Cauchy bound for the initial circle
    double bound = 0.0;
    const Complex lead = p.coeffs[d];
    for (int k = 0; k < d; ++k) bound = std::max(bound, std::abs(p.coeffs[k] / lead));
    const double r0 = 1.0 + bound;

    std::vector<Complex> z(d);
    for (int j = 0; j < d; ++j) {
        const double ang = 2.0 * M_PI * j / d + 0.4;  // offset breaks symmetry locks
        z[j] = r0 * Complex(std::cos(ang), std::sin(ang));
    }

    for (int iter = 0; iter < 200; ++iter) {
        double worst = 0.0;
        for (int j = 0; j < d; ++j) {
            const Complex pv = p.eval(z[j]);
            worst = std::max(worst, std::abs(pv));
            if (std::abs(pv) == 0.0) continue;
            const Complex dv = p.eval_derivative(z[j]);
            Complex newton = (std::abs(dv) > 0.0) ? pv / dv : Complex(1e-8, 1e-8);
            Complex sum(0.0, 0.0);
            for (int k = 0; k < d; ++k)
                if (k != j) sum += 1.0 / (z[j] - z[k]);
            const Complex denom = 1.0 - newton * sum;
            z[j] -= (std::abs(denom) > 1e-300) ? newton / denom : newton;
        }
        if (worst <= 0.25 * abs_residual) break;
    }

    // Newton polish, one root at a time
    for (int j = 0; j < d; ++j) {
        for (int it = 0; it < 20; ++it) {
            const Complex pv = p.eval(z[j]);
            if (std::abs(pv) <= 0.01 * abs_residual) break;
            const Complex dv = p.eval_derivative(z[j]);
            if (std::abs(dv) == 0.0) break;
            z[j] -= pv / dv;
        }
    }
    return z;
}

}  // namespace

std::vector<Complex> polynomial_roots(const ComplexPolynomial& p, double rel_residual) {
    const int d = p.degree();
    if (d <= 0) return {};
    if (d == 1) return {-p.coeffs[0] / p.coeffs[1]};
    if (d == 2) return quadratic_roots(p.coeffs[0], p.coeffs[1], p.coeffs[2]);
    return aberth_roots(p, rel_residual * p.coeff_scale());
}

}  // namespace ddescan
