#include "ddescan/char_eq.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>
#include <cmath>

namespace ddescan {

double operator_norm(const Eigen::MatrixXd& M) {
    if (M.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M);
    return svd.singularValues()(0);
}

double LinearDDE::scale() const { return 1.0 + operator_norm(A) + operator_norm(B); }

void LinearDDE::validate() const {
    if (A.rows() == 0 || A.rows() != A.cols()) throw InputError("A must be square and non-empty");
    if (B.rows() != A.rows() || B.cols() != A.cols())
        throw InputError("B must have the same shape as A");
    if (!A.allFinite() || !B.allFinite()) throw InputError("matrix entries must be finite");
    if (tau && (!(std::isfinite(*tau)) || *tau < 0.0))
        throw InputError("tau must be finite and nonnegative");
}

LinearDDE scalar_dde(double a, double b, std::optional<double> tau) {
    Eigen::MatrixXd A(1, 1), B(1, 1);
    A(0, 0) = a;
    B(0, 0) = b;
    return LinearDDE(A, B, tau);
}

Complex eval_char(const LinearDDE& sys, double tau, Complex lambda) {
    const Eigen::Index n = sys.dim();
    const Complex e = std::exp(-lambda * tau);
    Eigen::MatrixXcd M = -sys.A.cast<Complex>() - e * sys.B.cast<Complex>();
    M.diagonal().array() += lambda;
    if (n == 1) return M(0, 0);
    return Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
}

std::pair<Complex, Complex> eval_char_with_derivative(const LinearDDE& sys, double tau,
                                                      Complex lambda) {
    const Eigen::Index n = sys.dim();
    const Complex e = std::exp(-lambda * tau);
    Eigen::MatrixXcd M = -sys.A.cast<Complex>() - e * sys.B.cast<Complex>();
    M.diagonal().array() += lambda;
    Eigen::MatrixXcd dM = tau * e * sys.B.cast<Complex>();
    dM.diagonal().array() += Complex(1.0, 0.0);
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu(M);
    const Complex chi = lu.determinant();
    // chi' = chi * tr(M^{-1} dM); when M is singular to working precision the
    // trace blows up in a way that keeps chi * tr finite, so solve explicitly.
    Eigen::MatrixXcd X = lu.solve(dM);
    return {chi, chi * X.trace()};
}

ComplexPolynomial generating_polynomial(const LinearDDE& sys, double omega) {
    const Eigen::Index n = sys.dim();
    const int m = static_cast<int>(n) + 1;  // sample count = degree bound + 1
    const double radius = 2.0;
    const Complex iw(0.0, omega);

    Eigen::VectorXcd samples(m);
    for (int s = 0; s < m; ++s) {
        const double ang = 2.0 * M_PI * s / m;
        const Complex ys = radius * Complex(std::cos(ang), std::sin(ang));
        Eigen::MatrixXcd M = -sys.A.cast<Complex>() - ys * sys.B.cast<Complex>();
        M.diagonal().array() += iw;
        samples[s] = (n == 1) ? M(0, 0) : Eigen::PartialPivLU<Eigen::MatrixXcd>(M).determinant();
    }

    // inverse DFT on the scaled circle: c_k = r^{-k} / m * sum_s p(Y_s) w^{-ks}
    Eigen::VectorXcd raw(m);
    double rk = 1.0;
    for (int k = 0; k < m; ++k) {
        Complex acc(0.0, 0.0);
        for (int s = 0; s < m; ++s) {
            const double ang = -2.0 * M_PI * k * s / m;
            acc += samples[s] * Complex(std::cos(ang), std::sin(ang));
        }
        raw[k] = acc / (static_cast<double>(m) * rk);
        rk *= radius;
    }
    return trim_polynomial(raw);
}

std::vector<Complex> generating_roots(const LinearDDE& sys, double omega) {
    const ComplexPolynomial p = generating_polynomial(sys, omega);
    if (p.degenerate) throw DegenerateFrequency(omega);
    std::vector<Complex> roots = polynomial_roots(p);
    // a numerically zero root is only admissible when the constant term vanished
    const double c0 = std::abs(p.coeffs[0]);
    if (c0 > 0.0) {
        std::erase_if(roots, [&](Complex y) { return std::abs(y) < 1e-14 * p.coeff_scale(); });
    }
    return roots;
}

std::vector<Complex> delay_independent_roots(const LinearDDE& sys) {
    std::vector<Complex> out;
    Eigen::EigenSolver<Eigen::MatrixXd> es(sys.A);
    const double tol_re = 1e-10 * sys.scale();
    for (Eigen::Index i = 0; i < sys.dim(); ++i) {
        const Complex lam = es.eigenvalues()(i);
        if (std::abs(lam.real()) > tol_re) continue;
        Eigen::VectorXcd v = es.eigenvectors().col(i);
        const double bv = (sys.B.cast<Complex>() * v).norm();
        if (bv <= 1e-10 * v.norm()) out.push_back(Complex(0.0, lam.imag()));
    }
    return out;
}

}  // namespace ddescan
