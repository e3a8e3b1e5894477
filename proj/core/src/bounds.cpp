#include "mayer/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

// y / (e^y - 1), 1 at y = 0.
double x_over_expm1(double y) {
  if (std::abs(y) < 1e-5) return 1.0 - y / 2.0 + y * y / 12.0;
  return y / std::expm1(y);
}

// beta |v| (1 - e^{-x}) / x with x = beta * denom. Away from x = 0 the
// quotient beta |v| / x is taken as |v| / denom, which stays finite when
// e^{-x} underflows and tends to 1 as v -> +inf.
double scaled_ratio(double beta, double v, double denom) {
  if (beta == 0.0) return 0.0;
  if (std::isinf(v) && v > 0.0) return 1.0;
  const double x = beta * denom;
  if (std::abs(x) < 1.0) return beta * std::abs(v) * stable_ratio(x);
  return std::abs(v) / denom * -std::expm1(-x);
}

std::vector<double> sorted_inside(std::vector<double> points, double lo, double hi) {
  std::vector<double> out;
  for (double p : points)
    if (p > lo && p < hi && std::isfinite(p)) out.push_back(p);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// int_{|x| >= R} sum c r^{-p} dx.
double power_tail_integral(const PowerTail& tail, int d, double R) {
  double sum = 0.0;
  for (const PowerTerm& t : tail.terms) {
    if (t.coefficient == 0.0) continue;
    if (!(t.exponent > d)) {
      std::ostringstream os;
      os << "tail term r^-" << t.exponent << " is not integrable in d = " << d << " dimensions";
      throw TemperednessError(os.str());
    }
    sum += t.coefficient * std::pow(R, d - t.exponent) / (t.exponent - d);
  }
  return unit_sphere_surface(d) * sum;
}

Estimate checked(const QuadratureResult& r, const char* what) {
  require_converged(r, what);
  return {r.value, r.error};
}

std::vector<double> inner_breakpoints(const PairPotential& v, double a) {
  std::vector<double> points = v.features();
  for (int k = 1; k <= 8; ++k) points.push_back(a * (1.0 - std::pow(10.0, -k)));
  return sorted_inside(std::move(points), 0.0, a);
}

void require_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("beta must be finite and >= 0");
}

double radius_or_infinity(double numerator, double integral) {
  return integral > 0.0 ? numerator / integral : kInfiniteRadius;
}

struct Inner {
  double v_at_a;
  int d;
  std::vector<double> breakpoints;
};

Inner prepare_split(const PairPotential& v, double a) {
  const PotentialSplit s = split(v, a);
  return {s.v_at_a, v.dimension(), inner_breakpoints(v, a)};
}

Estimate inner_integral(const PairPotential& v, double a, const Inner& in, const QuadratureSpec& spec,
                        const std::function<double(double)>& integrand) {
  return radial_integral([&](double r) { return integrand(v(r)); }, in.d, 0.0, a, spec, std::nullopt,
                         in.breakpoints);
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw InvalidArgument("quadrature tolerances must be > 0");
  if (!(tail_cut > 0.0) || !std::isfinite(tail_cut)) throw InvalidArgument("tail_cut must be finite and > 0");
  if (max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be >= 1");
}

QuadratureOptions QuadratureSpec::options() const { return {rel_tol, abs_tol, max_subdivisions}; }

double stable_ratio(double x) {
  if (std::abs(x) < 1e-5) return 1.0 - x / 2.0 + x * x / 6.0 - x * x * x / 24.0;
  if (std::isinf(x)) return x > 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return -std::expm1(-x) / x;
}

double unit_sphere_surface(int d) {
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  return 2.0 * std::pow(std::numbers::pi, d / 2.0) / std::tgamma(d / 2.0);
}

double ball_volume(double a, int d) { return unit_sphere_surface(d) * std::pow(a, d) / d; }

Estimate radial_integral(const std::function<double(double)>& g, int d, double lo, double hi,
                         const QuadratureSpec& spec, const std::optional<PowerTail>& tail,
                         std::span<const double> breakpoints) {
  spec.validate();
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  if (!(lo >= 0.0) || !(hi >= lo)) throw InvalidArgument("radial_integral: need 0 <= lo <= hi");
  const double surface = unit_sphere_surface(d);
  auto radial = [&](double r) { return surface * std::pow(r, d - 1) * g(r); };
  const std::vector<double> points(breakpoints.begin(), breakpoints.end());

  if (std::isfinite(hi)) {
    if (hi == lo) return {};
    const auto inside = sorted_inside(points, lo, hi);
    return checked(integrate_adaptive(radial, lo, hi, spec.options(), inside), "radial integral");
  }

  double R = std::max(spec.tail_cut, lo);
  if (tail) R = std::max(R, tail->start);
  Estimate total;
  if (R > lo) {
    const auto inside = sorted_inside(points, lo, R);
    total = checked(integrate_adaptive(radial, lo, R, spec.options(), inside), "radial integral");
  }
  if (tail) {
    total.value += power_tail_integral(*tail, d, R);
  } else {
    // r = R / t, dr = R / t^2 dt
    auto mapped = [&](double t) { return radial(R / t) * R / (t * t); };
    const Estimate far = checked(integrate_adaptive(mapped, 0.0, 1.0, spec.options()), "radial tail integral");
    total.value += far.value;
    total.error += far.error;
  }
  return total;
}

double penrose_ruelle_integrand(double beta, double v) { return std::abs(std::expm1(-beta * v)); }

double mps_inner_integrand(double beta, double v, double v_a) {
  return -std::expm1(-beta * (v - v_a)) + beta * v_a;
}

double c_star_inner_integrand(double beta, double v, double v_a) { return scaled_ratio(beta, v, v - v_a); }

double c_hat_inner_integrand(double beta, double v, double v_a, double bbar) {
  return x_over_expm1(beta * bbar) * scaled_ratio(beta, v, v - v_a - bbar);
}

double c_hat_factor(double A, double y) { return x_over_expm1(y) * stable_ratio(A - y); }

bool is_identically_zero(const PairPotential& v) {
  const auto tail = v.abs_tail();
  return tail && tail->start == 0.0 && tail->terms.empty();
}

Estimate outer_tail_integral(const PairPotential& v, double a, double beta, const QuadratureSpec& spec) {
  require_beta(beta);
  if (beta == 0.0 || is_identically_zero(v)) return {};
  const auto features = v.features();
  const Estimate e =
      radial_integral([&](double r) { return std::abs(v(r)); }, v.dimension(), a, kInfiniteRadius, spec,
                      v.abs_tail(), features);
  return {beta * e.value, beta * e.error};
}

RadiusBound penrose_ruelle(const PairPotential& v, double beta, double B, const QuadratureSpec& spec) {
  require_beta(beta);
  if (!(B >= 0.0)) throw InvalidArgument("stability constant must be >= 0");
  if (is_identically_zero(v) || beta == 0.0) return {{}, kInfiniteRadius};
  const int d = v.dimension();
  auto g = [&](double r) { return penrose_ruelle_integrand(beta, v(r)); };
  const auto features = v.features();
  const auto tail = v.abs_tail();
  Estimate c;
  if (tail) {
    // beyond R, |e^{-beta V} - 1| = beta |V| (1 + O(beta |V(R)|))
    const double R = std::max(spec.tail_cut, tail->start);
    c = radial_integral(g, d, 0.0, R, spec, std::nullopt, features);
    const double far = beta * power_tail_integral(*tail, d, R);
    const double slack = beta * std::abs(tail->operator()(R));
    c.value += far;
    c.error += far * slack * std::exp(slack);
  } else {
    c = radial_integral(g, d, 0.0, kInfiniteRadius, spec, std::nullopt, features);
  }
  return {c, radius_or_infinity(1.0, std::exp(2.0 * beta * B + 1.0) * c.value)};
}

SplitRadiusBound mps_bound(const PairPotential& v, double a, double beta, double B, const QuadratureSpec& spec) {
  require_beta(beta);
  if (is_identically_zero(v)) return {{}, kInfiniteRadius};
  const Inner in = prepare_split(v, a);
  IntegralPieces p;
  p.inner = inner_integral(v, a, in, spec, [&](double x) { return mps_inner_integrand(beta, x, in.v_at_a); });
  p.outer = outer_tail_integral(v, a, beta, spec);
  return {p, radius_or_infinity(1.0, std::exp(beta * B + 1.0) * p.total().value)};
}

SplitRadiusBound basuev_c_star(const PairPotential& v, double a, double beta, double B,
                               const QuadratureSpec& spec) {
  require_beta(beta);
  if (is_identically_zero(v)) return {{}, kInfiniteRadius};
  const Inner in = prepare_split(v, a);
  IntegralPieces p;
  p.inner = inner_integral(v, a, in, spec, [&](double x) { return c_star_inner_integrand(beta, x, in.v_at_a); });
  p.outer = outer_tail_integral(v, a, beta, spec);
  return {p, radius_or_infinity(1.0, std::exp(beta * B + 1.0) * p.total().value)};
}

SplitRadiusBound basuev_c_hat(const PairPotential& v, double a, double beta, double bbar,
                              const QuadratureSpec& spec) {
  require_beta(beta);
  if (!(bbar >= 0.0) || !std::isfinite(bbar)) throw InvalidArgument("Bbar must be finite and >= 0");
  if (is_identically_zero(v)) return {{}, kInfiniteRadius};
  const Inner in = prepare_split(v, a);
  IntegralPieces p;
  p.inner = inner_integral(v, a, in, spec,
                           [&](double x) { return c_hat_inner_integrand(beta, x, in.v_at_a, bbar); });
  p.outer = outer_tail_integral(v, a, beta, spec);
  return {p, radius_or_infinity(x_over_expm1(beta * bbar), std::numbers::e * p.total().value)};
}

double basuev_radius(const PairPotential& v, double a, double beta, double B, double bbar,
                     const QuadratureSpec& spec) {
  return std::max(basuev_c_star(v, a, beta, B, spec).radius, basuev_c_hat(v, a, beta, bbar, spec).radius);
}

double h_factor(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("h(u) needs finite u > 0");
  // e^{u/1000} - e^{-u} = e^{u/1000} (1 - e^{-1.001 u})
  return 1.001 * u / (std::exp(u / 1000.0) * -std::expm1(-1.001 * u));
}

double h_factor_direct(double u) {
  if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("h(u) needs finite u > 0");
  return 1.001 * u / (std::exp(u / 1000.0) - std::exp(-u));
}

HardCoreBounds hard_core_bounds(const PairPotential& v, double a, double beta, double bbar,
                                const QuadratureSpec& spec) {
  require_beta(beta);
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("hard-core radius must be finite and > 0");
  if (!(bbar >= 0.0) || !std::isfinite(bbar)) throw InvalidArgument("Bbar must be finite and >= 0");
  HardCoreBounds out;
  out.core_volume = ball_volume(a, v.dimension());
  out.tail = outer_tail_integral(v, a, beta, spec);
  out.c_star = {out.core_volume + out.tail.value, out.tail.error};
  out.c_hat = {x_over_expm1(beta * bbar) * out.core_volume + out.tail.value, out.tail.error};
  return out;
}

BoundReport compare_report(const PairPotential& v, double beta, double a, const StabilityData& stability,
                           const QuadratureSpec& spec) {
  BoundReport r;
  r.potential = v.kind();
  r.beta = beta;
  r.a = a;
  r.B_used = stability.b_upper();
  r.Bbar_used = stability.bbar_factor() * r.B_used;
  r.provenance = {
      {"C_pr", "int |exp(-beta V) - 1| dx over R^d"},
      {"C_tilde", "int_{|x|<=a} [1 - exp(-beta (V - V(a))) + beta V(a)] + int_{|x|>=a} beta |V|"},
      {"C_star", "int_{|x|<=a} beta |V| (1 - exp(-x)) / x, x = beta (V - V(a)); + int_{|x|>=a} beta |V|"},
      {"C_hat", "int_{|x|<=a} beta |V| y/(e^y - 1) (1 - exp(-(x - y))) / (x - y), y = beta Bbar; + outer"},
      {"R_pr", "1 / (exp(2 beta B + 1) C_pr)"},
      {"R_mps", "1 / (exp(beta B + 1) C_tilde)"},
      {"R_star", "1 / (exp(beta B + 1) C_star)"},
      {"R_hat", "beta Bbar / (e (exp(beta Bbar) - 1) C_hat)"},
      {"B", stability.b_upper_source()},
      {"Bbar_factor", stability.bbar_factor_source()},
  };
  const RadiusBound pr = penrose_ruelle(v, beta, r.B_used, spec);
  r.C_pr = pr.integral;
  r.R_pr = pr.radius;
  if (is_identically_zero(v)) {
    r.R_mps = r.R_star = r.R_hat = r.R_basuev = kInfiniteRadius;
    return r;
  }
  r.v_at_a = v(a);
  const SplitRadiusBound mps = mps_bound(v, a, beta, r.B_used, spec);
  const SplitRadiusBound star = basuev_c_star(v, a, beta, r.B_used, spec);
  const SplitRadiusBound hat = basuev_c_hat(v, a, beta, r.Bbar_used, spec);
  r.C_tilde = mps.integral;
  r.C_star = star.integral;
  r.C_hat = hat.integral;
  r.R_mps = mps.radius;
  r.R_star = star.radius;
  r.R_hat = hat.radius;
  r.R_basuev = std::max(r.R_star, r.R_hat);
  r.ratios = {
      {"R_star/R_mps", r.R_star / r.R_mps},
      {"R_hat/R_star", r.R_hat / r.R_star},
      {"R_basuev/R_mps", r.R_basuev / r.R_mps},
      {"R_basuev/R_pr", r.R_basuev / r.R_pr},
  };
  return r;
}

}  // namespace mayer
