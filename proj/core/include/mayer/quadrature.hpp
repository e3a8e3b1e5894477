#pragma once

#include <functional>
#include <span>

namespace mayer {

// A value together with an absolute error estimate.
struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int evaluations = 0;
  int subdivisions = 0;
  bool converged = false;
};

// Globally adaptive 21-point Gauss-Kronrod on [a, b]: the panel with the
// largest error estimate is bisected until the total estimate drops below
// max(abs_tol, rel_tol * |value|) or the subdivision budget runs out
// (converged = false; the caller decides whether that is fatal). Interior
// breakpoints seed the initial panels. The estimate is |K21 - G10| per panel,
// which is pessimistic for smooth integrands.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options, std::span<const double> breakpoints = {});

// Same, for integrands that are themselves approximations: the integrand's
// own error is integrated with the Kronrod weights and added to each panel.
QuadratureResult integrate_adaptive_nested(const std::function<Estimate(double)>& f, double a, double b,
                                           const QuadratureOptions& options,
                                           std::span<const double> breakpoints = {});

// Throws ConvergenceError (carrying value and error) when !r.converged.
const QuadratureResult& require_converged(const QuadratureResult& r, const char* what);

}  // namespace mayer
