#pragma once

#include <Eigen/Dense>
#include <complex>
#include <optional>

#include "ddescan/errors.hpp"

namespace ddescan {

using Complex = std::complex<double>;

/// Linear delay system  x'(t) = A x(t) + B x(t - tau).
///
/// A is the instantaneous coupling, B the delayed coupling; both n x n real.
/// The delay is optional: most of the spectrum-curve machinery is
/// delay-independent and only the exact-root routines need tau.
struct LinearDDE {
    Eigen::MatrixXd A;
    Eigen::MatrixXd B;
    std::optional<double> tau;

    LinearDDE() = default;
    LinearDDE(Eigen::MatrixXd a, Eigen::MatrixXd b, std::optional<double> delay = std::nullopt)
        : A(std::move(a)), B(std::move(b)), tau(delay) {
        validate();
    }

    Eigen::Index dim() const { return A.rows(); }

    /// 1 + ||A||_2 + ||B||_2; the natural magnitude for residual tolerances
    /// and frequency bounds.
    double scale() const;

    void validate() const;
};

/// Scalar system x'(t) = a x(t) + b x(t - tau) as a 1x1 LinearDDE.
LinearDDE scalar_dde(double a, double b, std::optional<double> tau = std::nullopt);

/// Spectral norm via SVD (matrices here are small and dense).
double operator_norm(const Eigen::MatrixXd& M);

}  // namespace ddescan
