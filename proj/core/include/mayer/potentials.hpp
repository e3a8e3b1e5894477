#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mayer {

// c * r^{-exponent}
struct PowerTerm {
  double coefficient = 0.0;
  double exponent = 0.0;
};

// |V(r)| = sum of terms for every r >= start. An empty term list means V is
// identically zero beyond `start`.
struct PowerTail {
  double start = 0.0;
  std::vector<PowerTerm> terms;

  double operator()(double r) const;
};

// A radially symmetric pair potential V(r) in d dimensions. Immutable value
// type; copies share the underlying model.
class PairPotential {
 public:
  class Model;

  // V(r) = 1/r^12 - 2/r^6 (minimum -1 at r = 1), d = 3.
  static PairPotential lennard_jones();
  // V(r) = C / r^p.
  static PairPotential inverse_power(double C, double p, int d = 3);
  // V(r) = 0.
  static PairPotential zero(int d = 3);
  // Piecewise linear through sorted (r, V) knots; constant below the first
  // knot, zero beyond the last.
  static PairPotential tabulated(std::vector<std::pair<double, double>> knots, int d = 3);

  // Throws DomainError for r <= 0.
  double operator()(double r) const;

  int dimension() const;
  std::string kind() const;
  bool is_lennard_jones() const;

  // Exact power-law form of |V| at large r, when the model has one.
  std::optional<PowerTail> abs_tail() const;

  // Radii where V or |V| has kinks or changes sign; used to seed quadrature.
  std::vector<double> features() const;

  // Kind-specific parameters ("C", "p", "a", "H", ...), for reports.
  std::vector<std::pair<std::string, double>> parameters() const;

  const Model& model() const { return *model_; }

  explicit PairPotential(std::shared_ptr<const Model> model);

 private:
  std::shared_ptr<const Model> model_;
};

class PairPotential::Model {
 public:
  virtual ~Model() = default;
  virtual double value(double r) const = 0;
  virtual int dimension() const = 0;
  virtual std::string kind() const = 0;
  virtual std::optional<PowerTail> abs_tail() const = 0;
  virtual std::vector<double> features() const { return {}; }
  virtual std::vector<std::pair<std::string, double>> parameters() const { return {}; }
  virtual const PairPotential* wrapped() const { return nullptr; }
};

double lennard_jones(double r);

// max(0, -V(r)) = (|V| - V) / 2.
double negative_part(const PairPotential& v, double r);

// H on (0, a], V(r) beyond.
PairPotential hard_core_wrap(const PairPotential& v, double a, double H);

// V = V_a + K_a with V_a(r) = V(min(r, a)) and K_a(r) = V(r) - V(a) on (0, a],
// 0 beyond.
struct PotentialSplit {
  double a = 0.0;
  double v_at_a = 0.0;
  PairPotential full;
  PairPotential short_part;  // K_a
  PairPotential tail_part;   // V_a
};

inline constexpr int kSplitGridPoints = 10000;

// Checks V(r) >= V(a) > 0 on a geometric grid of kSplitGridPoints radii in
// [a * 1e-3, a] plus a itself; throws NotBasuevError with the first witness.
PotentialSplit split(const PairPotential& v, double a);

// V(r) >= C / r^{d+eps} for r <= r1, V >= -w on [r1, r2], V >= -C' / r^{d+eps}
// for r >= r2.
struct LJTypeEnvelope {
  double C = 0.0;
  double C_prime = 0.0;
  double r1 = 0.0;
  double r2 = 0.0;
  double w = 0.0;
  double eps = 0.0;
  int d = 3;

  // Throws InvalidArgument unless coefficients are non-negative, r1 <= r2 and
  // eps > 0.
  void validate() const;
};

struct EnvelopeCheck {
  bool passed = true;
  double witness_radius = 0.0;  // first failing radius
  std::string failed_condition;  // "repulsive core", "well depth" or "attractive tail"
  double margin = 0.0;           // V(witness) - bound(witness) (negative on failure)
};

EnvelopeCheck lj_type_check(const PairPotential& v, const LJTypeEnvelope& env, const std::vector<double>& grid);

// Geometric grid over (0, r1], [r1, r2] and [r2, r_max], `per_region` points each.
std::vector<double> envelope_grid(const LJTypeEnvelope& env, double r_max = 50.0, int per_region = 2000);

}  // namespace mayer
