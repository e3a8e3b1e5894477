#include "mayer/stability.hpp"

#include <cmath>
#include <sstream>

#include "mayer/bounds.hpp"
#include "mayer/errors.hpp"

namespace mayer {

StabilityData::StabilityData(double b_lower, double b_upper, double bbar_factor, std::string b_lower_source,
                             std::string b_upper_source, std::string bbar_factor_source)
    : b_lower_(b_lower),
      b_upper_(b_upper),
      bbar_factor_(bbar_factor),
      b_lower_source_(std::move(b_lower_source)),
      b_upper_source_(std::move(b_upper_source)),
      bbar_factor_source_(std::move(bbar_factor_source)) {
  if (!std::isfinite(b_lower) || !std::isfinite(b_upper) || !(b_lower >= 0.0) || !(b_lower <= b_upper))
    throw InvalidArgument("stability data: need 0 <= B_lower <= B_upper");
  if (!std::isfinite(bbar_factor) || !(bbar_factor >= 1.0))
    throw InvalidArgument("stability data: need bbar_factor >= 1");
}

StabilityData lj_stability_registry() {
  return StabilityData(8.61, 14.316, 1.001, "minimum energies of optimal LJ clusters (lower bound)",
                       "certified upper bound on the LJ stability constant (2015)",
                       "cluster minima for n <= 1000 give Bbar_n <= 1.001 B");
}

std::string to_string(MuMethod m) {
  switch (m) {
    case MuMethod::cube_packing:
      return "cube-packing";
    case MuMethod::lj_literature:
      return "lj-literature";
    case MuMethod::user:
      return "user";
  }
  return "unknown";
}

MuMethod parse_mu_method(const std::string& name) {
  if (name == "cube" || name == "cube-packing") return MuMethod::cube_packing;
  if (name == "lj-literature" || name == "yuhjtman") return MuMethod::lj_literature;
  if (name == "user") return MuMethod::user;
  throw InvalidArgument("unknown mu method '" + name + "' (expected cube, yuhjtman or user)");
}

double envelope_mass(const LJTypeEnvelope& env) {
  env.validate();
  const int d = env.d;
  const double eta_r2 = env.C_prime * std::pow(env.r2, -(d + env.eps));
  const double inside = std::max(env.w, eta_r2) * ball_volume(env.r2, d);
  const double outside = unit_sphere_surface(d) * env.C_prime * std::pow(env.r2, -env.eps) / env.eps;
  return inside + outside;
}

double cube_packing_constant(const LJTypeEnvelope& env) {
  return std::pow(4.0 * env.d, env.d / 2.0) * envelope_mass(env);
}

MuBound mu_upper_cube(const LJTypeEnvelope& env, double a) {
  env.validate();
  if (!(a > 0.0) || !(a < env.r1)) {
    std::ostringstream os;
    os << "cube-packing bound needs 0 < a < r1 = " << env.r1 << " (got a = " << a << ")";
    throw DomainError(os.str());
  }
  return MuBound{a, cube_packing_constant(env) / std::pow(a, env.d), MuMethod::cube_packing};
}

MuBound mu_upper_lj_literature(double a) {
  if (!(a >= kLJLiteratureLow && a <= kLJLiteratureHigh)) {
    std::ostringstream os;
    os << "LJ literature bound on mu(a) holds for 0.6 <= a <= 0.7 only (got a = " << a << ")";
    throw DomainError(os.str());
  }
  return MuBound{a, kLJLiteratureMuConstant / (a * a * a), MuMethod::lj_literature};
}

MuBound mu_upper_user(double K, double a, int d) {
  if (!(K >= 0.0) || !std::isfinite(K)) throw InvalidArgument("user mu constant must be finite and >= 0");
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("mu bound needs a > 0");
  if (d < 1) throw InvalidArgument("dimension must be >= 1");
  return MuBound{a, K / std::pow(a, d), MuMethod::user};
}

LJTypeEnvelope lj_default_envelope() {
  LJTypeEnvelope env;
  env.C = 0.5;
  env.C_prime = 2.0;
  env.r1 = 0.8;
  env.r2 = 1.0;
  env.w = 1.0;
  env.eps = 3.0;
  env.d = 3;
  return env;
}

MuBound mu_upper(const PairPotential& v, const MuSelector& selector, double a) {
  switch (selector.method) {
    case MuMethod::cube_packing:
      if (selector.envelope.d != v.dimension()) throw MethodMismatchError("envelope dimension differs from potential");
      return mu_upper_cube(selector.envelope, a);
    case MuMethod::lj_literature:
      if (!v.is_lennard_jones())
        throw MethodMismatchError("the LJ literature bound on mu(a) applies to the classical Lennard-Jones only (got " +
                                  v.kind() + ")");
      return mu_upper_lj_literature(a);
    case MuMethod::user:
      return mu_upper_user(selector.user_constant, a, v.dimension());
  }
  throw InvalidArgument("unknown mu method");
}

bool criterion_holds(const PairPotential& v, double a, const MuBound& mu) {
  if (!(std::abs(mu.a - a) <= 1e-12 * std::abs(a))) {
    std::ostringstream os;
    os << "criterion: mu bound was computed at a = " << mu.a << ", not at a = " << a;
    throw InvalidArgument(os.str());
  }
  const double v_a = v(a);
  if (!std::isfinite(v_a)) throw DomainError("criterion: V(a) is not finite");
  return v_a > 2.0 * mu.value;
}

double find_max_a(const PairPotential& v, const MuSelector& selector, double lo, double hi, double tol) {
  if (!(lo > 0.0) || !(hi >= lo) || !std::isfinite(hi)) throw InvalidArgument("find_max_a: need 0 < lo <= hi");
  if (!(tol > 0.0)) throw InvalidArgument("find_max_a: tol must be > 0");
  auto holds = [&](double a) { return criterion_holds(v, a, mu_upper(v, selector, a)); };
  if (!holds(lo)) {
    std::ostringstream os;
    os.precision(10);
    const MuBound mu = mu_upper(v, selector, lo);
    os << "criterion V(a) > 2 mu(a) fails at the lower end a = " << lo << ": V(a) = " << v(lo)
       << ", 2 mu(a) <= " << 2.0 * mu.value;
    throw NoValidRadiusError(os.str());
  }
  if (holds(hi)) return hi;
  for (int step = 0; step < kMaxBisectionSteps && hi - lo > tol; ++step) {
    const double mid = 0.5 * (lo + hi);
    (holds(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace mayer
