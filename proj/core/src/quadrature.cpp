#include "mayer/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <sstream>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Panel {
  double a;
  double b;
  double value;
  double error;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.error < y.error; }
};

// Kronrod abscissae are the non-negative nodes x_0 = 0 < x_1 < ... < x_10;
// the Gauss-10 nodes are the odd-indexed ones.
template <typename F>
Panel gk21(const F& f, double a, double b, int& evaluations) {
  static const auto& xk = Kronrod::abscissa();
  static const auto& wk = Kronrod::weights();
  static const auto& wg = Gauss::weights();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  double kronrod = 0.0;
  double gauss = 0.0;
  double inner_error = 0.0;
  for (std::size_t i = 0; i < xk.size(); ++i) {
    const int copies = i == 0 ? 1 : 2;
    for (int s = 0; s < copies; ++s) {
      const double x = s == 0 ? center + half * xk[i] : center - half * xk[i];
      const Estimate e = f(x);
      ++evaluations;
      kronrod += wk[i] * e.value;
      inner_error += wk[i] * e.error;
      if (i % 2 == 1) gauss += wg[i / 2] * e.value;
    }
  }
  kronrod *= half;
  gauss *= half;
  return Panel{a, b, kronrod, std::abs(kronrod - gauss) + std::abs(half) * inner_error};
}

template <typename F>
QuadratureResult integrate_impl(const F& f, double a, double b, const QuadratureOptions& options,
                                std::span<const double> breakpoints) {
  if (!(options.rel_tol > 0.0) || !(options.abs_tol >= 0.0) || options.max_subdivisions < 0)
    throw InvalidArgument("quadrature: tolerances must be positive and the budget non-negative");
  if (!std::isfinite(a) || !std::isfinite(b)) throw InvalidArgument("quadrature: limits must be finite");
  QuadratureResult result;
  if (a == b) {
    result.converged = true;
    return result;
  }
  const double sign = a < b ? 1.0 : -1.0;
  const double lo = std::min(a, b);
  const double hi = std::max(a, b);

  std::vector<double> cuts{lo};
  for (double p : breakpoints)
    if (p > lo && p < hi) cuts.push_back(p);
  cuts.push_back(hi);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  std::priority_queue<Panel, std::vector<Panel>, ByError> panels;
  std::vector<Panel> frozen;  // too narrow to split further
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) panels.push(gk21(f, cuts[i], cuts[i + 1], result.evaluations));

  auto totals = [&] {
    double value = 0.0;
    double error = 0.0;
    auto copy = panels;
    while (!copy.empty()) {
      value += copy.top().value;
      error += copy.top().error;
      copy.pop();
    }
    for (const Panel& p : frozen) {
      value += p.value;
      error += p.error;
    }
    return Estimate{value, error};
  };

  // Running sums avoid re-walking the heap on every step; the final answer is
  // re-summed from the panels.
  Estimate running = totals();
  while (true) {
    const double target = std::max(options.abs_tol, options.rel_tol * std::abs(running.value));
    if (running.error <= target) {
      result.converged = true;
      break;
    }
    if (panels.empty() || result.subdivisions >= options.max_subdivisions) break;
    const Panel worst = panels.top();
    panels.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 64.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(mid), 1e-300)) {
      frozen.push_back(worst);
      continue;
    }
    const Panel left = gk21(f, worst.a, mid, result.evaluations);
    const Panel right = gk21(f, mid, worst.b, result.evaluations);
    ++result.subdivisions;
    running.value += left.value + right.value - worst.value;
    running.error += left.error + right.error - worst.error;
    panels.push(left);
    panels.push(right);
  }
  const Estimate final_totals = totals();
  result.value = sign * final_totals.value;
  result.error = final_totals.error;
  if (!result.converged) {
    // Frozen panels can hold the error above target with no budget spent.
    const double target = std::max(options.abs_tol, options.rel_tol * std::abs(final_totals.value));
    result.converged = final_totals.error <= target;
  }
  return result;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    const QuadratureOptions& options, std::span<const double> breakpoints) {
  auto wrapped = [&f](double x) { return Estimate{f(x), 0.0}; };
  return integrate_impl(wrapped, a, b, options, breakpoints);
}

QuadratureResult integrate_adaptive_nested(const std::function<Estimate(double)>& f, double a, double b,
                                           const QuadratureOptions& options, std::span<const double> breakpoints) {
  return integrate_impl(f, a, b, options, breakpoints);
}

const QuadratureResult& require_converged(const QuadratureResult& r, const char* what) {
  if (!r.converged) {
    std::ostringstream os;
    os.precision(6);
    os << what << ": tolerance not reached after " << r.subdivisions << " subdivisions (value " << r.value
       << ", error estimate " << r.error << ")";
    throw ConvergenceError(os.str(), r.value, r.error);
  }
  return r;
}

}  // namespace mayer
