// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
// Every tolerance used below is pinned in the constants block.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mayer/bounds.hpp"
#include "mayer/combinatorics.hpp"
#include "mayer/merge_sequences.hpp"
#include "mayer/potentials.hpp"
#include "mayer/reference_values.hpp"
#include "mayer/stability.hpp"
#include "mayer/ursell.hpp"
#include "oracles.hpp"

using namespace mayer;

namespace {

// criterion 1
constexpr int kSeeds = 100;
constexpr double kGraphPartitionRelTol = 1e-10;
constexpr double kTreeMergeRelTol = 1e-5;
constexpr double kRouteQuadratureTol = 1e-8;
constexpr int kTreeMergeMaxN = 4;
constexpr double kIdentityBudgetSeconds = 120.0;
// criteria 3, 4
constexpr double kValueRelTol = 5e-3;
constexpr double kInnerRelTol = 5e-2;
constexpr double kOptimalAAbsTol = 2e-4;
constexpr double kComposedRelTol = 2e-2;
constexpr double kSearchTol = 1e-9;
// criterion 5
constexpr int kMonotonePoints = 10000;
constexpr double kOrderSlack = 1e-12;
// criterion 7
constexpr double kBaseRelTol = 1e-8;
constexpr double kRoundoffSlack = 1e-13;
constexpr double kSmallestRadius = 1e-3;
constexpr int kRadiusGridPoints = 2000;

double rel(double x, double ref) { return std::abs(x - ref) / std::abs(ref); }

struct Outcome {
  bool pass = true;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const Outcome& o) {
  std::printf("criterion %d %s: %s  %s\n", id, o.pass ? "PASS" : "FAIL", title.c_str(), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

Outcome identity_suite() {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  double worst_gp = 0.0;
  double worst_tm = 0.0;
  int cases = 0;
  for (int n = 2; n <= 7; ++n)
    for (int s = 0; s < kSeeds; ++s) {
      const InteractionMatrix m = InteractionMatrix::random(n, 1000 * n + s);
      for (double beta : {0.3, 1.0, 2.7}) {
        ++cases;
        const double g = ursell_graph_sum(m, beta);
        const double p = ursell_partition_sum(m, beta);
        const double gp = std::abs(g - p) / std::max(std::abs(g), std::abs(p));
        worst_gp = std::max(worst_gp, gp);
        if (gp > kGraphPartitionRelTol) o.pass = false;
        if (n > kTreeMergeMaxN) continue;
        for (double route : {ursell_tree_integral(m, beta, kRouteQuadratureTol),
                             merge_sequence_expansion(m, beta, kRouteQuadratureTol)}) {
          const double d = std::max(rel(route, g), rel(route, p));
          worst_tm = std::max(worst_tm, d);
          if (d > kTreeMergeRelTol) o.pass = false;
        }
      }
    }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds > kIdentityBudgetSeconds) o.pass = false;
  std::ostringstream os;
  os << cases << " cases, graph-partition worst " << worst_gp << ", tree/merge worst " << worst_tm << ", "
     << seconds << " s";
  o.detail = os.str();
  return o;
}

Outcome integer_identities() {
  Outcome o;
  for (int n = 2; n <= 12; ++n)
    if (mobius_alternating_sum(n) != 0) o.pass = false;
  for (int n = 2; n <= 8; ++n) {
    std::uint64_t trees = 0;
    for_each_labeled_tree(n, TreeLabeling::canonical, [&](const EdgeLabeledTree&) { ++trees; });
    std::uint64_t cayley = 1;
    for (int k = 0; k < n - 2; ++k) cayley *= static_cast<std::uint64_t>(n);
    if (trees != cayley) o.pass = false;
  }
  const auto connected = enumerate_connected_graphs(4).size();
  const auto brute = oracle::count_connected_graphs(4);
  if (connected != 38 || brute != 38) o.pass = false;
  std::ostringstream os;
  os << "connected graphs on 4 vertices: " << connected << " (brute force " << brute << ")";
  o.detail = os.str();
  return o;
}

Outcome small_cut_values() {
  Outcome o;
  const PairPotential lj = PairPotential::lennard_jones();
  const double a = kSmallCutRadius;
  const double core = lj(a) * ball_volume(a, 3);
  const Estimate outer = outer_tail_integral(lj, a, 1.0);
  const SplitRadiusBound hat = basuev_c_hat(lj, a, 1.0, 0.0);
  o.pass = rel(core, 37444) <= kValueRelTol && rel(outer.value, 12381) <= kValueRelTol &&
           rel(hat.integral.total().value, 12382) <= kValueRelTol &&
           rel(hat.integral.inner.value, 0.823) <= kInnerRelTol;
  std::ostringstream os;
  os << "beta V(a) W_a " << core << ", outer " << outer.value << ", C_hat " << hat.integral.total().value
     << " (inner " << hat.integral.inner.value << ")";
  o.detail = os.str();
  return o;
}

Outcome optimal_cut_values() {
  Outcome o;
  const PairPotential lj = PairPotential::lennard_jones();
  MuSelector sel;
  sel.method = MuMethod::lj_literature;
  const double a_star = find_max_a(lj, sel, kLJLiteratureLow, kLJLiteratureHigh, kSearchTol);
  const double a = 0.6397;
  const SplitRadiusBound hat = basuev_c_hat(lj, a, 1.0, 0.0);
  const double total = hat.integral.total().value;
  const double h = h_factor(lj_stability_registry().b_lower());
  const double composed = total / h;
  const double component_derived = 64.13 / h;
  o.pass = std::abs(a_star - 0.6397) <= kOptimalAAbsTol && rel(total, 64.13) <= kValueRelTol &&
           rel(hat.integral.inner.value, 2.5) <= kInnerRelTol && rel(hat.integral.outer.value, 61.63) <= kValueRelTol &&
           rel(composed, component_derived) <= kComposedRelTol;
  std::ostringstream os;
  os << "a* " << a_star << ", C_hat " << total << " (" << hat.integral.inner.value << " + " << hat.integral.outer.value
     << "), C_hat/h " << composed << " vs " << component_derived << "; h(8.61) = " << h << " vs printed 8.69 (FLAG)";
  o.detail = os.str();
  return o;
}

Outcome inequality_suite() {
  Outcome o;
  const PairPotential lj = PairPotential::lennard_jones();
  int grid = 0;
  for (double a : {0.36, 0.5, 0.64})
    for (double beta : {0.5, 1.0, 2.0}) {
      const double c_star = basuev_c_star(lj, a, beta, 0.0).integral.total().value;
      const double c_tilde = mps_bound(lj, a, beta, 0.0).integral.total().value;
      if (c_star > c_tilde * (1 + kOrderSlack)) o.pass = false;
      for (double bbar : {0.0, 1.0, 8.61, 20.0}) {
        ++grid;
        const double c_hat = basuev_c_hat(lj, a, beta, bbar).integral.total().value;
        if (c_hat > c_star * (1 + kOrderSlack)) o.pass = false;
      }
    }
  std::mt19937_64 rng(20240917);
  std::uniform_real_distribution<double> y(0.0, 30.0);
  const double As[] = {0.0, 0.5, 1.0, 10.0};
  int monotone_bad = 0;
  for (int i = 0; i < kMonotonePoints; ++i) {
    const double A = As[i % 4];
    double y1 = y(rng);
    double y2 = y(rng);
    if (y1 > y2) std::swap(y1, y2);
    if (c_hat_factor(A, y2) > c_hat_factor(A, y1) * (1 + kOrderSlack)) ++monotone_bad;
  }
  if (monotone_bad > 0) o.pass = false;
  const double B = lj_stability_registry().b_upper();
  const double r_star = basuev_c_star(lj, kSmallCutRadius, 1.0, B).radius;
  const double r_mps = mps_bound(lj, kSmallCutRadius, 1.0, B).radius;
  if (!(r_star > r_mps)) o.pass = false;
  std::ostringstream os;
  os << grid << " grid points, " << monotone_bad << " monotonicity violations, R*/R_mps at a = 0.3637: "
     << r_star / r_mps;
  o.detail = os.str();
  return o;
}

Outcome discrepancy_ledger() {
  Outcome o;
  const Reproduction r = reproduce("all");
  int flags = 0;
  int passes = 0;
  for (const ReproductionRow& row : r.rows) {
    const bool expected_flag = row.reference.preregistered;
    if (row.status == RowStatus::flag) ++flags;
    if (row.status == RowStatus::pass) ++passes;
    if (expected_flag != (row.status == RowStatus::flag) || row.status == RowStatus::fail) {
      o.pass = false;
      o.detail += "[" + row.reference.name + ": " + to_string(row.status) + "] ";
    }
  }
  if (flags != 3) o.pass = false;
  std::ostringstream os;
  os << r.rows.size() << " rows, " << passes << " PASS, " << flags << " FLAG";
  o.detail += os.str();
  return o;
}

Outcome robustness() {
  Outcome o;
  const PairPotential lj = PairPotential::lennard_jones();
  QuadratureSpec base;
  base.rel_tol = kBaseRelTol;
  QuadratureSpec half = base;
  half.rel_tol = kBaseRelTol / 2;
  int checked = 0;
  double worst = 0.0;
  auto compare = [&](const Estimate& x, const Estimate& y) {
    ++checked;
    const double gap = std::abs(x.value - y.value);
    const double allowed = x.error + y.error + kRoundoffSlack * std::abs(x.value);
    if (allowed > 0) worst = std::max(worst, gap / allowed);
    if (gap > allowed) o.pass = false;
  };
  const double B = lj_stability_registry().b_upper();
  const double bbar = lj_stability_registry().bbar_factor() * B;
  for (double beta : {0.5, 1.0, 2.0}) {
    compare(penrose_ruelle(lj, beta, B, base).integral, penrose_ruelle(lj, beta, B, half).integral);
    for (double a : {kSmallCutRadius, 0.5, 0.6397}) {
      const auto pieces = [&](const IntegralPieces& x, const IntegralPieces& y) {
        compare(x.inner, y.inner);
        compare(x.outer, y.outer);
      };
      pieces(mps_bound(lj, a, beta, B, base).integral, mps_bound(lj, a, beta, B, half).integral);
      pieces(basuev_c_star(lj, a, beta, B, base).integral, basuev_c_star(lj, a, beta, B, half).integral);
      for (double bb : {0.0, bbar})
        pieces(basuev_c_hat(lj, a, beta, bb, base).integral, basuev_c_hat(lj, a, beta, bb, half).integral);
    }
  }
  int nonfinite = 0;
  for (double a : {kSmallCutRadius, 0.6397}) {
    const double va = lj(a);
    for (int i = 0; i <= kRadiusGridPoints; ++i) {
      const double r = kSmallestRadius * std::pow(a / kSmallestRadius, static_cast<double>(i) / kRadiusGridPoints);
      const double v = lj(r);
      for (double beta : {0.5, 1.0, 2.0})
        for (double x : {penrose_ruelle_integrand(beta, v), mps_inner_integrand(beta, v, va),
                         c_star_inner_integrand(beta, v, va), c_hat_inner_integrand(beta, v, va, 0.0),
                         c_hat_inner_integrand(beta, v, va, bbar)})
          if (!std::isfinite(x)) ++nonfinite;
    }
  }
  if (nonfinite > 0) o.pass = false;
  std::ostringstream os;
  os << checked << " quadratures, worst |diff|/error " << worst << ", " << nonfinite
     << " non-finite integrand values down to r = " << kSmallestRadius;
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  report(1, "identity suite", identity_suite());
  report(2, "integer identities", integer_identities());
  report(3, "small-cut values", small_cut_values());
  report(4, "optimal-cut values", optimal_cut_values());
  report(5, "inequality suite", inequality_suite());
  report(6, "discrepancy ledger", discrepancy_ledger());
  report(7, "numerical robustness", robustness());
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
