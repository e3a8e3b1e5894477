#pragma once

#include <span>
#include <vector>

#include "mayer/quadrature.hpp"

namespace mayer {

inline constexpr int kMaxSimplexLevels = 4;
inline constexpr double kSimplexLevelRelTol = 1e-8;

// exp(-sum_k (b_k - b_{k+1}) c_k) over the ordered simplex
// beta >= b_1 >= ... >= b_m >= 0, with b_{m+1} = 0.
struct SimplexIntegrand {
  std::vector<double> coefficients;  // c_1 .. c_m
  double beta = 1.0;
};

// Nested adaptive quadrature, each level at kSimplexLevelRelTol (or `tol` if
// tighter). Throws ConvergenceError if the propagated error estimate exceeds
// tol * value.
double simplex_exponential_integral(const SimplexIntegrand& s, double tol = 1e-6);
Estimate simplex_exponential_estimate(const SimplexIntegrand& s, double level_rel_tol = kSimplexLevelRelTol);

// exp(-sum_i b_i w_i) over the same simplex, integrated in the untelescoped
// variables. Used by the merge-sequence route.
double ordered_simplex_linear_integral(std::span<const double> weights, double beta, double tol = 1e-6);

}  // namespace mayer
