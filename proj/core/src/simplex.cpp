#include "mayer/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

constexpr int kLevelBudget = 200;

void check_levels(std::size_t m, double beta) {
  if (m < 1 || m > static_cast<std::size_t>(kMaxSimplexLevels)) {
    std::ostringstream os;
    os << "simplex integral: " << m << " levels outside supported range [1, " << kMaxSimplexLevels << "]";
    throw SizeLimitError(os.str());
  }
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("simplex integral: beta must be finite and >= 0");
}

QuadratureOptions level_options(double rel_tol) {
  QuadratureOptions o;
  o.rel_tol = rel_tol;
  o.abs_tol = 0.0;
  o.max_subdivisions = kLevelBudget;
  return o;
}

// F_k(b_k) = int_0^{b_k} db_{k+1} exp(-(b_k - b_{k+1}) c_k) F_{k+1}(b_{k+1}),
// with F_m(b_m) = exp(-b_m c_m). Levels are 0-based here.
class Telescoped {
 public:
  Telescoped(std::span<const double> c, double rel_tol) : c_(c), options_(level_options(rel_tol)) {}

  Estimate level(std::size_t k, double upper) const {
    const std::size_t m = c_.size();
    if (k + 1 == m) return Estimate{std::exp(-upper * c_[k]), 0.0};
    if (upper == 0.0) return Estimate{0.0, 0.0};
    auto inner = [&](double next) {
      const Estimate e = level(k + 1, next);
      const double w = std::exp(-(upper - next) * c_[k]);
      return Estimate{w * e.value, w * e.error};
    };
    const QuadratureResult r = integrate_adaptive_nested(inner, 0.0, upper, options_);
    return Estimate{r.value, r.converged ? r.error : r.error + std::abs(r.value)};
  }

 private:
  std::span<const double> c_;
  QuadratureOptions options_;
};

// G_i(b_i) = int_0^{b_i} db_{i+1} exp(-b_{i+1} w_{i+1}) G_{i+1}(b_{i+1}), G_m = 1.
class Linear {
 public:
  Linear(std::span<const double> w, double rel_tol) : w_(w), options_(level_options(rel_tol)) {}

  // Integral over b_{k} in [0, upper] of exp(-b_k w_k) G_k(b_k) (0-based k).
  Estimate level(std::size_t k, double upper) const {
    if (upper == 0.0) return Estimate{0.0, 0.0};
    auto integrand = [&](double b) {
      const double factor = std::exp(-b * w_[k]);
      if (k + 1 == w_.size()) return Estimate{factor, 0.0};
      const Estimate e = level(k + 1, b);
      return Estimate{factor * e.value, factor * e.error};
    };
    const QuadratureResult r = integrate_adaptive_nested(integrand, 0.0, upper, options_);
    return Estimate{r.value, r.converged ? r.error : r.error + std::abs(r.value)};
  }

 private:
  std::span<const double> w_;
  QuadratureOptions options_;
};

double finish(const Estimate& e, double tol, const char* what) {
  if (!(e.error <= tol * std::abs(e.value))) {
    std::ostringstream os;
    os.precision(6);
    os << what << ": relative tolerance " << tol << " not reached (value " << e.value << ", error estimate " << e.error
       << ")";
    throw ConvergenceError(os.str(), e.value, e.error);
  }
  return e.value;
}

}  // namespace

Estimate simplex_exponential_estimate(const SimplexIntegrand& s, double level_rel_tol) {
  check_levels(s.coefficients.size(), s.beta);
  for (double c : s.coefficients)
    if (!std::isfinite(c)) throw InvalidArgument("simplex integral: coefficients must be finite");
  if (s.beta == 0.0) return Estimate{0.0, 0.0};
  // The outermost variable b_1 runs over [0, beta] with no weight of its own.
  const Telescoped t(s.coefficients, level_rel_tol);
  auto outer = [&](double b1) { return t.level(0, b1); };
  const QuadratureResult r = integrate_adaptive_nested(outer, 0.0, s.beta, level_options(level_rel_tol));
  return Estimate{r.value, r.converged ? r.error : r.error + std::abs(r.value)};
}

double simplex_exponential_integral(const SimplexIntegrand& s, double tol) {
  if (!(tol > 0.0)) throw InvalidArgument("simplex integral: tol must be > 0");
  const Estimate e = simplex_exponential_estimate(s, std::min(tol, kSimplexLevelRelTol));
  if (s.beta == 0.0) return 0.0;
  return finish(e, tol, "simplex_exponential_integral");
}

double ordered_simplex_linear_integral(std::span<const double> weights, double beta, double tol) {
  check_levels(weights.size(), beta);
  if (!(tol > 0.0)) throw InvalidArgument("simplex integral: tol must be > 0");
  for (double w : weights)
    if (!std::isfinite(w)) throw InvalidArgument("simplex integral: weights must be finite");
  if (beta == 0.0) return 0.0;
  const Linear l(weights, std::min(tol, kSimplexLevelRelTol));
  return finish(l.level(0, beta), tol, "ordered_simplex_linear_integral");
}

}  // namespace mayer
