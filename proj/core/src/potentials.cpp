#include "mayer/potentials.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

void require_dimension(int d) {
  if (d < 1) throw InvalidArgument("potential: dimension must be >= 1");
}

class LennardJonesModel final : public PairPotential::Model {
 public:
  double value(double r) const override { return lennard_jones(r); }
  int dimension() const override { return 3; }
  std::string kind() const override { return "lennard-jones"; }
  std::optional<PowerTail> abs_tail() const override {
    // V < 0 beyond the zero 2^{-1/6}, so |V| = 2/r^6 - 1/r^12 there.
    return PowerTail{std::pow(2.0, -1.0 / 6.0), {{2.0, 6.0}, {-1.0, 12.0}}};
  }
  std::vector<double> features() const override { return {std::pow(2.0, -1.0 / 6.0), 1.0}; }
};

class InversePowerModel final : public PairPotential::Model {
 public:
  InversePowerModel(double C, double p, int d) : C_(C), p_(p), d_(d) {
    if (!std::isfinite(C) || !std::isfinite(p) || !(p > 0.0))
      throw InvalidArgument("inverse-power potential: need finite C and p > 0");
    require_dimension(d);
  }
  double value(double r) const override { return C_ * std::pow(r, -p_); }
  int dimension() const override { return d_; }
  std::string kind() const override { return "inverse-power"; }
  std::optional<PowerTail> abs_tail() const override {
    if (C_ == 0.0) return PowerTail{0.0, {}};
    return PowerTail{0.0, {{std::abs(C_), p_}}};
  }
  std::vector<std::pair<std::string, double>> parameters() const override { return {{"C", C_}, {"p", p_}}; }

 private:
  double C_;
  double p_;
  int d_;
};

class ZeroModel final : public PairPotential::Model {
 public:
  explicit ZeroModel(int d) : d_(d) { require_dimension(d); }
  double value(double) const override { return 0.0; }
  int dimension() const override { return d_; }
  std::string kind() const override { return "zero"; }
  std::optional<PowerTail> abs_tail() const override { return PowerTail{0.0, {}}; }

 private:
  int d_;
};

class TabulatedModel final : public PairPotential::Model {
 public:
  TabulatedModel(std::vector<std::pair<double, double>> knots, int d) : knots_(std::move(knots)), d_(d) {
    require_dimension(d);
    if (knots_.empty()) throw InvalidArgument("tabulated potential: need at least one knot");
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      const auto [r, v] = knots_[i];
      if (!(r > 0.0) || !std::isfinite(r) || !std::isfinite(v))
        throw InvalidArgument("tabulated potential: knots need finite r > 0 and finite V");
      if (i > 0 && !(r > knots_[i - 1].first)) throw InvalidArgument("tabulated potential: radii must increase");
    }
  }
  double value(double r) const override {
    if (r <= knots_.front().first) return knots_.front().second;
    if (r > knots_.back().first) return 0.0;
    const auto hi = std::lower_bound(knots_.begin(), knots_.end(), r,
                                     [](const std::pair<double, double>& k, double x) { return k.first < x; });
    const auto lo = hi - 1;
    const double t = (r - lo->first) / (hi->first - lo->first);
    return lo->second + t * (hi->second - lo->second);
  }
  int dimension() const override { return d_; }
  std::string kind() const override { return "tabulated"; }
  std::optional<PowerTail> abs_tail() const override { return PowerTail{knots_.back().first, {}}; }
  std::vector<double> features() const override {
    std::vector<double> out;
    for (std::size_t i = 0; i < knots_.size(); ++i) {
      out.push_back(knots_[i].first);
      // sign changes inside a segment
      if (i + 1 < knots_.size() && knots_[i].second * knots_[i + 1].second < 0.0) {
        const double t = knots_[i].second / (knots_[i].second - knots_[i + 1].second);
        out.push_back(knots_[i].first + t * (knots_[i + 1].first - knots_[i].first));
      }
    }
    return out;
  }
  std::vector<std::pair<std::string, double>> parameters() const override {
    return {{"knots", static_cast<double>(knots_.size())}};
  }

 private:
  std::vector<std::pair<double, double>> knots_;
  int d_;
};

std::optional<PowerTail> tail_beyond(const PairPotential& v, double radius) {
  auto tail = v.abs_tail();
  if (tail) tail->start = std::max(tail->start, radius);
  return tail;
}

std::vector<double> features_with(const PairPotential& v, double radius) {
  auto f = v.features();
  f.push_back(radius);
  std::sort(f.begin(), f.end());
  return f;
}

class HardCoreModel final : public PairPotential::Model {
 public:
  HardCoreModel(PairPotential tail, double a, double H) : tail_(std::move(tail)), a_(a), H_(H) {
    if (!(a > 0.0) || !std::isfinite(a)) throw InvalidArgument("hard-core: core radius a must be finite and > 0");
    if (!(H > 0.0) || !std::isfinite(H)) throw InvalidArgument("hard-core: cutoff H must be finite and > 0");
  }
  double value(double r) const override { return r <= a_ ? H_ : tail_(r); }
  int dimension() const override { return tail_.dimension(); }
  std::string kind() const override { return "hard-core"; }
  std::optional<PowerTail> abs_tail() const override { return tail_beyond(tail_, a_); }
  std::vector<double> features() const override { return features_with(tail_, a_); }
  std::vector<std::pair<std::string, double>> parameters() const override { return {{"a", a_}, {"H", H_}}; }
  const PairPotential* wrapped() const override { return &tail_; }

 private:
  PairPotential tail_;
  double a_;
  double H_;
};

// V_a: V frozen at V(a) inside a.
class CappedModel final : public PairPotential::Model {
 public:
  CappedModel(PairPotential v, double a) : v_(std::move(v)), a_(a), v_a_(v_(a)) {}
  double value(double r) const override { return r <= a_ ? v_a_ : v_(r); }
  int dimension() const override { return v_.dimension(); }
  std::string kind() const override { return "split-tail"; }
  std::optional<PowerTail> abs_tail() const override { return tail_beyond(v_, a_); }
  std::vector<double> features() const override { return features_with(v_, a_); }
  std::vector<std::pair<std::string, double>> parameters() const override { return {{"a", a_}}; }
  const PairPotential* wrapped() const override { return &v_; }

 private:
  PairPotential v_;
  double a_;
  double v_a_;
};

// K_a: V - V(a) inside a, zero outside.
class ShortRangeModel final : public PairPotential::Model {
 public:
  ShortRangeModel(PairPotential v, double a) : v_(std::move(v)), a_(a), v_a_(v_(a)) {}
  double value(double r) const override { return r <= a_ ? v_(r) - v_a_ : 0.0; }
  int dimension() const override { return v_.dimension(); }
  std::string kind() const override { return "split-short"; }
  std::optional<PowerTail> abs_tail() const override { return PowerTail{a_, {}}; }
  std::vector<double> features() const override { return {a_}; }
  std::vector<std::pair<std::string, double>> parameters() const override { return {{"a", a_}}; }
  const PairPotential* wrapped() const override { return &v_; }

 private:
  PairPotential v_;
  double a_;
  double v_a_;
};

}  // namespace

double PowerTail::operator()(double r) const {
  double sum = 0.0;
  for (const PowerTerm& t : terms) sum += t.coefficient * std::pow(r, -t.exponent);
  return sum;
}

PairPotential::PairPotential(std::shared_ptr<const Model> model) : model_(std::move(model)) {
  if (!model_) throw InvalidArgument("PairPotential: null model");
}

PairPotential PairPotential::lennard_jones() { return PairPotential(std::make_shared<LennardJonesModel>()); }

PairPotential PairPotential::inverse_power(double C, double p, int d) {
  return PairPotential(std::make_shared<InversePowerModel>(C, p, d));
}

PairPotential PairPotential::zero(int d) { return PairPotential(std::make_shared<ZeroModel>(d)); }

PairPotential PairPotential::tabulated(std::vector<std::pair<double, double>> knots, int d) {
  return PairPotential(std::make_shared<TabulatedModel>(std::move(knots), d));
}

double PairPotential::operator()(double r) const {
  if (!(r > 0.0)) {
    std::ostringstream os;
    os << "potential evaluated at r = " << r << " (need r > 0)";
    throw DomainError(os.str());
  }
  return model_->value(r);
}

int PairPotential::dimension() const { return model_->dimension(); }
std::string PairPotential::kind() const { return model_->kind(); }
bool PairPotential::is_lennard_jones() const { return model_->kind() == "lennard-jones"; }
std::optional<PowerTail> PairPotential::abs_tail() const { return model_->abs_tail(); }
std::vector<double> PairPotential::features() const { return model_->features(); }
std::vector<std::pair<std::string, double>> PairPotential::parameters() const { return model_->parameters(); }

double lennard_jones(double r) {
  if (!(r > 0.0)) throw DomainError("lennard_jones: need r > 0");
  const double inv6 = 1.0 / (r * r * r * r * r * r);
  return inv6 * inv6 - 2.0 * inv6;
}

double negative_part(const PairPotential& v, double r) { return std::max(0.0, -v(r)); }

PairPotential hard_core_wrap(const PairPotential& v, double a, double H) {
  return PairPotential(std::make_shared<HardCoreModel>(v, a, H));
}

PotentialSplit split(const PairPotential& v, double a) {
  if (!(a > 0.0) || !std::isfinite(a)) throw DomainError("split: cut radius a must be finite and > 0");
  const double v_a = v(a);
  if (!std::isfinite(v_a)) throw DomainError("split: V(a) is not finite");
  if (!(v_a > 0.0)) {
    std::ostringstream os;
    os << "split: V(a) = " << v_a << " is not > 0 at a = " << a;
    throw NotBasuevError(os.str(), a);
  }
  const double lo = a * 1e-3;
  const double ratio = std::pow(a / lo, 1.0 / (kSplitGridPoints - 1));
  double r = lo;
  for (int i = 0; i < kSplitGridPoints; ++i, r *= ratio) {
    const double x = std::min(r, a);
    if (v(x) < v_a) {
      std::ostringstream os;
      os.precision(10);
      os << "split: V(" << x << ") = " << v(x) << " < V(a) = " << v_a << " (condition V(r) >= V(a) on (0, a] fails)";
      throw NotBasuevError(os.str(), x);
    }
  }
  return PotentialSplit{a, v_a, v, PairPotential(std::make_shared<ShortRangeModel>(v, a)),
                        PairPotential(std::make_shared<CappedModel>(v, a))};
}

void LJTypeEnvelope::validate() const {
  if (!(C >= 0.0) || !(C_prime >= 0.0) || !(w >= 0.0)) throw InvalidArgument("envelope: C, C', w must be >= 0");
  if (!(r1 > 0.0) || !(r2 >= r1)) throw InvalidArgument("envelope: need 0 < r1 <= r2");
  if (!(eps > 0.0)) throw InvalidArgument("envelope: eps must be > 0");
  if (d < 1) throw InvalidArgument("envelope: dimension must be >= 1");
}

EnvelopeCheck lj_type_check(const PairPotential& v, const LJTypeEnvelope& env, const std::vector<double>& grid) {
  env.validate();
  const double power = env.d + env.eps;
  EnvelopeCheck report;
  auto fail = [&](double r, const char* what, double margin) {
    if (report.passed) {
      report.passed = false;
      report.witness_radius = r;
      report.failed_condition = what;
      report.margin = margin;
    }
  };
  for (double r : grid) {
    if (!(r > 0.0)) continue;
    const double value = v(r);
    if (r <= env.r1) {
      const double bound = env.C * std::pow(r, -power);
      if (value < bound) fail(r, "repulsive core", value - bound);
    }
    if (r >= env.r1 && r <= env.r2 && value < -env.w) fail(r, "well depth", value + env.w);
    if (r >= env.r2) {
      const double bound = -env.C_prime * std::pow(r, -power);
      if (value < bound) fail(r, "attractive tail", value - bound);
    }
    if (!report.passed) break;
  }
  return report;
}

std::vector<double> envelope_grid(const LJTypeEnvelope& env, double r_max, int per_region) {
  env.validate();
  std::vector<double> grid;
  auto geometric = [&](double lo, double hi) {
    if (!(hi > lo)) {
      grid.push_back(hi);
      return;
    }
    const double q = std::pow(hi / lo, 1.0 / (per_region - 1));
    double r = lo;
    for (int i = 0; i < per_region; ++i, r *= q) grid.push_back(std::min(r, hi));
  };
  geometric(env.r1 * 1e-3, env.r1);
  geometric(env.r1, env.r2);
  geometric(env.r2, std::max(r_max, env.r2));
  return grid;
}

}  // namespace mayer
