#pragma once

// Radial integrals behind the convergence-radius lower bounds for the Mayer
// series, and the bounds themselves:
//   R_pr   = 1 / (e^{2 beta B + 1} C)        C      = int |e^{-beta V} - 1|
//   R_mps  = 1 / (e^{beta B + 1} C_tilde)
//   R_star = 1 / (e^{beta B + 1} C_star)
//   R_hat  = beta Bbar / (e (e^{beta Bbar} - 1) C_hat)
// The last three need the split V = V_a + K_a at a cut radius a.

#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mayer/potentials.hpp"
#include "mayer/quadrature.hpp"
#include "mayer/stability.hpp"

namespace mayer {

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  double tail_cut = 50.0;  // analytic power-law tails beyond this radius
  int max_subdivisions = 2000;

  void validate() const;
  QuadratureOptions options() const;
};

// Returned instead of dividing by a zero integral.
inline constexpr double kInfiniteRadius = std::numeric_limits<double>::infinity();

// (1 - e^{-x}) / x, 1 at x = 0.
double stable_ratio(double x);

// Surface area of the unit sphere in R^d, S_{d-1} = 2 pi^{d/2} / Gamma(d/2).
double unit_sphere_surface(int d);
// Volume W_a(d) of the ball of radius a.
double ball_volume(double a, int d);

// int_{lo <= |x| <= hi} g(|x|) dx over R^d. hi may be +inf; then beyond
// max(tail_cut, tail->start) the declared power law `tail` (describing g
// itself) is integrated in closed form, or, with no declared tail, the range
// is mapped onto (0, 1] by r = R / t. Throws TemperednessError for a declared
// tail term with exponent <= d, ConvergenceError if the tolerance is missed.
Estimate radial_integral(const std::function<double(double)>& g, int d, double lo, double hi,
                         const QuadratureSpec& spec, const std::optional<PowerTail>& tail = std::nullopt,
                         std::span<const double> breakpoints = {});

// Pointwise integrands, exposed for tests. v is V(r), v_a is V(a).
double penrose_ruelle_integrand(double beta, double v);
double mps_inner_integrand(double beta, double v, double v_a);
// beta |V| (1 - e^{-x}) / x with x = beta (V - V(a)); finite as V -> +inf.
double c_star_inner_integrand(double beta, double v, double v_a);
// beta |V| f(y) with y = beta Bbar and
//   f(y) = y / (e^y - 1) * (1 - e^{-(A - y)}) / (A - y),   A = beta (V - V(a)).
double c_hat_inner_integrand(double beta, double v, double v_a, double bbar);
// f(y) above, as a function of A and y; f(0) = stable_ratio(A).
double c_hat_factor(double A, double y);

struct IntegralPieces {
  Estimate inner;  // |x| <= a
  Estimate outer;  // |x| >= a

  Estimate total() const { return {inner.value + outer.value, inner.error + outer.error}; }
};

struct RadiusBound {
  Estimate integral;
  double radius = 0.0;
};

struct SplitRadiusBound {
  IntegralPieces integral;
  double radius = 0.0;
};

RadiusBound penrose_ruelle(const PairPotential& v, double beta, double B, const QuadratureSpec& spec = {});
SplitRadiusBound mps_bound(const PairPotential& v, double a, double beta, double B, const QuadratureSpec& spec = {});
SplitRadiusBound basuev_c_star(const PairPotential& v, double a, double beta, double B,
                               const QuadratureSpec& spec = {});
SplitRadiusBound basuev_c_hat(const PairPotential& v, double a, double beta, double bbar,
                              const QuadratureSpec& spec = {});

// max(R_star, R_hat).
double basuev_radius(const PairPotential& v, double a, double beta, double B, double bbar,
                     const QuadratureSpec& spec = {});

// beta int_{|x| >= a} |V|, shared by C_tilde, C_star and C_hat.
Estimate outer_tail_integral(const PairPotential& v, double a, double beta, const QuadratureSpec& spec = {});

// h(u) = 1.001 u / (e^{u/1000} - e^{-u}), evaluated as 1.001 u e^u / expm1(1.001 u).
double h_factor(double u);
// The displayed formula evaluated literally.
double h_factor_direct(double u);

struct HardCoreBounds {
  double core_volume = 0.0;  // W_a(d)
  Estimate tail;             // beta int_{|x| >= a} |V|
  Estimate c_star;
  Estimate c_hat;
};

// Hard core of radius a plus the tail of v beyond a:
//   C_star = W_a(d) + tail,  C_hat = beta Bbar / (e^{beta Bbar} - 1) W_a(d) + tail.
HardCoreBounds hard_core_bounds(const PairPotential& v, double a, double beta, double bbar,
                                const QuadratureSpec& spec = {});

struct BoundReport {
  std::string potential;
  double beta = 1.0;
  double a = 0.0;
  double v_at_a = 0.0;
  double B_used = 0.0;
  double Bbar_used = 0.0;
  Estimate C_pr;
  IntegralPieces C_tilde;
  IntegralPieces C_star;
  IntegralPieces C_hat;
  double R_pr = 0.0;
  double R_mps = 0.0;
  double R_star = 0.0;
  double R_hat = 0.0;
  double R_basuev = 0.0;
  std::vector<std::pair<std::string, double>> ratios;
  std::vector<std::pair<std::string, std::string>> provenance;
};

// B = B_upper, Bbar = bbar_factor * B.
BoundReport compare_report(const PairPotential& v, double beta, double a, const StabilityData& stability,
                           const QuadratureSpec& spec = {});

// True when V vanishes for every r > 0 (declared, not sampled).
bool is_identically_zero(const PairPotential& v);

}  // namespace mayer
