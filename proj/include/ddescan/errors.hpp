#pragma once

#include <stdexcept>
#include <string>

namespace ddescan {

/// Base class for all numerical/analysis failures raised by this library.
class AnalysisError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Input that fails structural validation (shape mismatch, non-finite entries, bad JSON).
class InputError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The generating polynomial reduced to a constant at this frequency; the
/// frequency must be excluded from the spectrum curves.
class DegenerateFrequency : public AnalysisError {
  public:
    explicit DegenerateFrequency(double omega)
        : AnalysisError("generating polynomial is degenerate at omega = " + std::to_string(omega)),
          omega_(omega) {}
    double omega() const { return omega_; }

  private:
    double omega_;
};

/// Two roots of the generating polynomial coincide at a sampled frequency.
class BranchCollision : public AnalysisError {
  public:
    explicit BranchCollision(double omega)
        : AnalysisError("branch collision at omega = " + std::to_string(omega)), omega_(omega) {}
    double omega() const { return omega_; }

  private:
    double omega_;
};

/// The spectrum curve hovers at zero over an interval; no classification is possible.
class Inconclusive : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class ZeroDelayCoupling : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class NonTransverseCrossing : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

/// Requested delay sits on (or too close to) a critical delay.
class OnBifurcation : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class Degenerate : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

/// Crossing pattern matches none of the known templates; closed-form counting rules do not apply.
class Unclassified : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class NoConvergence : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class RootOnContour : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class QuadratureStall : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class PreconditionViolated : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

class StepTooLarge : public AnalysisError {
  public:
    using AnalysisError::AnalysisError;
};

}  // namespace ddescan
