#include "mayer/reference_values.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "mayer/errors.hpp"
#include "mayer/stability.hpp"

namespace mayer {

const std::vector<ReferenceValue>& reference_values() {
  using K = ToleranceKind;
  static const std::vector<ReferenceValue> table = {
      {"beta V(a) W_a(3), a = 0.3637", "5.2", 37444, K::relative, 5e-3, false,
       "inner MPS piece at a = 0.3637, printed as 37444"},
      {"4 pi int_a^inf |V|, a = 0.3637", "5.2", 12381, K::relative, 5e-3, false,
       "outer piece at a = 0.3637, printed as 12381"},
      {"C_tilde(1), a = 0.3637", "5.2", 49825, K::relative, 5e-3, false,
       "MPS integral lower bound, printed as 37444 + 12381 >= 49825"},
      {"C_hat(1,0) inner, a = 0.3637", "5.2", 0.823, K::relative, 5e-2, false,
       "inner piece of C_hat(1,0), printed as 0.823"},
      {"C_hat(1,0) outer, a = 0.3637", "5.2", 12381.1, K::relative, 5e-3, false,
       "outer piece of C_hat(1,0), printed as 12381.1"},
      {"C_hat(1,0), a = 0.3637", "5.2", 12382, K::relative, 5e-3, false,
       "printed as 0.823 + 12381.1 <= 12382"},
      {"h(8.61)", "5.2", 8.69, K::relative, 1e-3, true,
       "printed as h(8.61) >= 8.69; the displayed h gives about 8.546"},
      {"C_hat(1,0) / h(8.61), a = 0.3637", "5.2", 1425, K::relative, 2e-2, false,
       "radius constant, printed as 8.69 / 12382 >= 1 / 1425"},
      {"ratio display denominator, a = 0.3637", "5.2", 885, K::relative, 2e-2, true,
       "the ratio display divides by 885 while the surrounding chain uses 1425"},
      {"C_tilde / (C_hat / h), a = 0.3637", "5.2", 34.96, K::relative, 2e-2, false,
       "improvement over the MPS radius, printed as 1425 / 49825 <= 1 / 34.96"},
      {"max a with V(a) > 2 * 24.05 / a^3", "5.3", 0.6397, K::absolute, 2e-4, false,
       "criterion with the LJ literature mu bound holds as soon as a <= 0.6397"},
      {"C_hat(1,0) inner, a = 0.6397", "5.3", 2.5, K::relative, 5e-2, false,
       "inner piece at a = 0.6397, printed as 2.5"},
      {"C_hat(1,0) outer, a = 0.6397", "5.3", 61.63, K::relative, 5e-3, false,
       "outer piece at a = 0.6397, printed as 61.63"},
      {"C_hat(1,0), a = 0.6397", "5.3", 64.13, K::relative, 5e-3, false,
       "printed as 2.5 + 61.63 <= 64.13"},
      {"C_hat(1,0) / h(8.61), a = 0.6397", "5.3", 7.4, K::relative, 2e-2, false,
       "radius constant, printed as 8.69 / 64.13 >= 1 / 7.4"},
      {"improvement factor over the MPS radius", "5.3", 6.7e4, K::relative, 2e-2, true,
       "printed as 6.7e4; 49825 / (64.13 / h(8.61)) is about 6.6e3"},
  };
  return table;
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::pass:
      return "PASS";
    case RowStatus::flag:
      return "FLAG";
    case RowStatus::fail:
      return "FAIL";
  }
  return "?";
}

bool Reproduction::ok() const {
  for (const auto& r : rows)
    if (r.status == RowStatus::fail) return false;
  return true;
}

namespace {

void small_cut(const QuadratureSpec& spec, std::map<std::string, double>& out) {
  const PairPotential lj = PairPotential::lennard_jones();
  const double a = kSmallCutRadius;
  const double beta = 1.0;
  const double core = beta * lj(a) * ball_volume(a, 3);
  const double outer = outer_tail_integral(lj, a, beta, spec).value;
  const SplitRadiusBound hat = basuev_c_hat(lj, a, beta, 0.0, spec);
  const double h = h_factor(8.61);
  const double constant = hat.integral.total().value / h;
  out["beta V(a) W_a(3), a = 0.3637"] = core;
  out["4 pi int_a^inf |V|, a = 0.3637"] = outer;
  out["C_tilde(1), a = 0.3637"] = core + outer;
  out["C_hat(1,0) inner, a = 0.3637"] = hat.integral.inner.value;
  out["C_hat(1,0) outer, a = 0.3637"] = hat.integral.outer.value;
  out["C_hat(1,0), a = 0.3637"] = hat.integral.total().value;
  out["h(8.61)"] = h;
  out["C_hat(1,0) / h(8.61), a = 0.3637"] = constant;
  out["ratio display denominator, a = 0.3637"] = constant;
  out["C_tilde / (C_hat / h), a = 0.3637"] = (core + outer) / constant;
}

double optimal_cut() {
  MuSelector selector;
  selector.method = MuMethod::lj_literature;
  return find_max_a(PairPotential::lennard_jones(), selector, kLJLiteratureLow, kLJLiteratureHigh, 1e-9);
}

}  // namespace

Reproduction reproduce(const std::string& section, const QuadratureSpec& spec) {
  if (section != "5.2" && section != "5.3" && section != "all")
    throw InvalidArgument("reproduce: section must be 5.2, 5.3 or all (got '" + section + "')");
  const bool want52 = section != "5.3";
  const bool want53 = section != "5.2";

  std::map<std::string, double> computed;
  Reproduction out;
  // 5.3 uses the 5.2 MPS integral as its baseline.
  small_cut(spec, computed);

  if (want53) {
    const PairPotential lj = PairPotential::lennard_jones();
    const double a_opt = optimal_cut();
    const double a = 0.6397;  // printed cut, used for the integrals
    const SplitRadiusBound hat = basuev_c_hat(lj, a, 1.0, 0.0, spec);
    const double h = computed["h(8.61)"];
    const double constant = hat.integral.total().value / h;
    const double factor = computed["C_tilde(1), a = 0.3637"] / constant;
    computed["max a with V(a) > 2 * 24.05 / a^3"] = a_opt;
    computed["C_hat(1,0) inner, a = 0.6397"] = hat.integral.inner.value;
    computed["C_hat(1,0) outer, a = 0.6397"] = hat.integral.outer.value;
    computed["C_hat(1,0), a = 0.6397"] = hat.integral.total().value;
    computed["C_hat(1,0) / h(8.61), a = 0.6397"] = constant;
    computed["improvement factor over the MPS radius"] = factor;
    std::ostringstream note;
    note.precision(6);
    const double absolute = factor * std::exp(41.66 - 14.316);
    note << "improvement in absolute terms (factor * e^{41.66 - 14.316}): recomposed " << absolute
         << ", printed 5e16 (not asserted)";
    out.notes.push_back(note.str());
  }

  for (const ReferenceValue& ref : reference_values()) {
    if ((ref.section == "5.2" && !want52) || (ref.section == "5.3" && !want53)) continue;
    ReproductionRow row;
    row.reference = ref;
    row.computed = computed.at(ref.name);
    row.rel_diff = std::abs(row.computed - ref.printed) / std::abs(ref.printed);
    const double diff = ref.tolerance_kind == ToleranceKind::relative ? row.rel_diff
                                                                      : std::abs(row.computed - ref.printed);
    if (diff <= ref.tolerance)
      row.status = RowStatus::pass;
    else
      row.status = ref.preregistered ? RowStatus::flag : RowStatus::fail;
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace mayer
