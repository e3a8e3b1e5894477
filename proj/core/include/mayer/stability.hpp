#pragma once

// Upper bounds on mu(a), the largest attractive energy a particle can receive
// from a cloud of particles pairwise at distance >= a, and the criterion
// V(a) > 2 mu(a) that makes the capped potential V_a inherit the stability
// constants of V.

#include <string>

#include "mayer/potentials.hpp"

namespace mayer {

// Certified stability data for one potential. B_lower <= B <= B_upper and
// Bbar <= bbar_factor * B.
class StabilityData {
 public:
  StabilityData(double b_lower, double b_upper, double bbar_factor, std::string b_lower_source = "user",
                std::string b_upper_source = "user", std::string bbar_factor_source = "user");

  double b_lower() const noexcept { return b_lower_; }
  double b_upper() const noexcept { return b_upper_; }
  double bbar_factor() const noexcept { return bbar_factor_; }
  const std::string& b_lower_source() const noexcept { return b_lower_source_; }
  const std::string& b_upper_source() const noexcept { return b_upper_source_; }
  const std::string& bbar_factor_source() const noexcept { return bbar_factor_source_; }

 private:
  double b_lower_;
  double b_upper_;
  double bbar_factor_;
  std::string b_lower_source_;
  std::string b_upper_source_;
  std::string bbar_factor_source_;
};

// Holds for every stable potential: B <= Bbar <= 13/12 B.
inline constexpr double kGeneralBbarFactor = 13.0 / 12.0;

// Classical LJ: 8.61 <= B <= 14.316, Bbar <= 1.001 B.
StabilityData lj_stability_registry();

enum class MuMethod { cube_packing, lj_literature, user };

std::string to_string(MuMethod m);
// Accepts "cube", "cube-packing", "lj-literature", "yuhjtman", "user".
MuMethod parse_mu_method(const std::string& name);

struct MuBound {
  double a = 0.0;
  double value = 0.0;
  MuMethod method = MuMethod::user;
};

// Integral over R^d of eta_bar, where eta(r) = C' / r^{d+eps} and
// eta_bar = max(w, eta(r2)) inside r2, eta outside.
double envelope_mass(const LJTypeEnvelope& env);

// (4d)^{d/2} * envelope_mass(env).
double cube_packing_constant(const LJTypeEnvelope& env);

// mu(a) <= cube_packing_constant / a^d, for 0 < a < r1.
MuBound mu_upper_cube(const LJTypeEnvelope& env, double a);

// mu(a) <= 24.05 / a^3 for the classical LJ, 0.6 <= a <= 0.7.
inline constexpr double kLJLiteratureMuConstant = 24.05;
inline constexpr double kLJLiteratureLow = 0.6;
inline constexpr double kLJLiteratureHigh = 0.7;
MuBound mu_upper_lj_literature(double a);

// mu(a) <= K / a^d for a user-certified constant K >= 0.
MuBound mu_upper_user(double K, double a, int d);

// Envelope for the classical LJ used by the cube-packing bound:
// C = 0.5, C' = 2, r1 = 0.8, r2 = 1, w = 1, eps = 3.
LJTypeEnvelope lj_default_envelope();

// Which bound to apply, and its inputs.
struct MuSelector {
  MuMethod method = MuMethod::lj_literature;
  LJTypeEnvelope envelope = lj_default_envelope();  // cube_packing
  double user_constant = 0.0;                       // user
};

// Throws MethodMismatchError when the literature bound is asked for a
// potential other than the classical LJ.
MuBound mu_upper(const PairPotential& v, const MuSelector& selector, double a);

// V(a) > 2 mu.value. Throws InvalidArgument if mu was computed at another a.
bool criterion_holds(const PairPotential& v, double a, const MuBound& mu);

inline constexpr int kMaxBisectionSteps = 60;

// Largest a in [lo, hi] (to within tol) at which the criterion holds.
// Returns hi if it holds there; throws NoValidRadiusError if it fails at lo.
double find_max_a(const PairPotential& v, const MuSelector& selector, double lo, double hi, double tol = 1e-6);

}  // namespace mayer
