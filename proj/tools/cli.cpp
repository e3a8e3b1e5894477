#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "mayer/bounds.hpp"
#include "mayer/errors.hpp"
#include "mayer/interaction_matrix.hpp"
#include "mayer/io.hpp"
#include "mayer/merge_sequences.hpp"
#include "mayer/reference_values.hpp"
#include "mayer/stability.hpp"
#include "mayer/ursell.hpp"

namespace mayer::cli {

namespace {

using nlohmann::json;

// Raised for argument combinations CLI11 cannot express.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "table";
  std::string path;
};

void emit(const Output& o, const std::string& text, std::ostream& out) {
  if (o.path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.path);
  if (!file) throw UsageError("cannot write '" + o.path + "'");
  file << text;
}

std::pair<double, double> parse_interval(const std::string& s) {
  const auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("--interval must look like lo:hi (got '" + s + "')");
  try {
    std::size_t used_lo = 0;
    std::size_t used_hi = 0;
    const std::string lo_text = s.substr(0, colon);
    const std::string hi_text = s.substr(colon + 1);
    const double lo = std::stod(lo_text, &used_lo);
    const double hi = std::stod(hi_text, &used_hi);
    if (used_lo != lo_text.size() || used_hi != hi_text.size()) throw std::invalid_argument(s);
    if (!(lo > 0.0) || !(hi > lo)) throw UsageError("--interval needs 0 < lo < hi (got '" + s + "')");
    return {lo, hi};
  } catch (const std::logic_error&) {
    throw UsageError("--interval must look like lo:hi (got '" + s + "')");
  }
}

// V >= 0 at every knot/feature and on a geometric grid over [1e-4, 1e3].
bool sampled_nonnegative(const PairPotential& v) {
  std::vector<double> radii = v.features();
  const int points = 10000;
  const double q = std::pow(1e7, 1.0 / (points - 1));
  double r = 1e-4;
  for (int i = 0; i < points; ++i, r *= q) radii.push_back(r);
  for (double x : radii)
    if (x > 0.0 && v(x) < 0.0) return false;
  return true;
}

LJTypeEnvelope envelope_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("--envelope: invalid JSON: ") + e.what());
  }
  LJTypeEnvelope env;
  env.C = j.value("C", 0.0);
  env.C_prime = j.value("C_prime", 0.0);
  env.r1 = j.value("r1", 0.0);
  env.r2 = j.value("r2", 0.0);
  env.w = j.value("w", 0.0);
  env.eps = j.value("eps", 0.0);
  env.d = j.value("d", 3);
  env.validate();
  return env;
}

// Options shared by criterion and bounds for choosing mu(a) and a.
struct CutOptions {
  std::string method;
  std::string interval;
  std::string envelope;
  std::optional<double> mu_constant;
  double tol = 1e-6;
};

struct ResolvedCut {
  MuSelector selector;
  double lo = 0.0;
  double hi = 0.0;
};

ResolvedCut resolve_cut(const PairPotential& v, const CutOptions& o) {
  ResolvedCut c;
  std::string method = o.method;
  if (method.empty()) {
    if (v.is_lennard_jones())
      method = "yuhjtman";
    else if (sampled_nonnegative(v))
      method = "user";  // V^- = 0, so mu(a) = 0 exactly
    else
      throw UsageError("--method is required for potentials other than the classical LJ");
  }
  try {
    c.selector.method = parse_mu_method(method);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
  if (c.selector.method == MuMethod::user) {
    if (o.mu_constant)
      c.selector.user_constant = *o.mu_constant;
    else if (!sampled_nonnegative(v))
      throw UsageError("--method user needs --mu-constant K (mu(a) <= K / a^d)");
  } else if (o.mu_constant) {
    throw UsageError("--mu-constant only applies to --method user");
  }
  if (c.selector.method == MuMethod::cube_packing) {
    if (!o.envelope.empty())
      c.selector.envelope = envelope_from_json(o.envelope);
    else if (!v.is_lennard_jones())
      throw UsageError("--method cube needs --envelope for potentials other than the classical LJ");
  } else if (!o.envelope.empty()) {
    throw UsageError("--envelope only applies to --method cube");
  }
  if (!o.interval.empty()) {
    std::tie(c.lo, c.hi) = parse_interval(o.interval);
  } else if (c.selector.method == MuMethod::lj_literature) {
    c.lo = kLJLiteratureLow;
    c.hi = kLJLiteratureHigh;
  } else if (c.selector.method == MuMethod::cube_packing) {
    c.lo = 1e-2 * c.selector.envelope.r1;
    c.hi = (1.0 - 1e-9) * c.selector.envelope.r1;
  } else {
    throw UsageError("--interval lo:hi is required for --method user");
  }
  if (!(o.tol > 0.0)) throw UsageError("--tol must be > 0");
  return c;
}

// ---------------------------------------------------------------------------
// identity

struct IdentityOptions {
  int n = 4;
  double beta = 1.0;
  std::uint64_t seed = 42;
  double tol = 1e-5;
  std::string matrix;
};

int cmd_identity(const IdentityOptions& o, const Output& fmt, std::ostream& out, std::ostream& err) {
  if (!(o.beta >= 0.0) || !std::isfinite(o.beta)) throw UsageError("--beta must be finite and >= 0");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be > 0");
  const InteractionMatrix m = o.matrix.empty() ? InteractionMatrix::random(o.n, o.seed) : load_matrix(o.matrix);
  const int n = m.size();
  if (n < 1 || n > kMaxGraphSumSize) {
    std::ostringstream os;
    os << "identity: n = " << n << " outside [1, " << kMaxGraphSumSize << "]";
    throw UsageError(os.str());
  }
  // quadrature routes cannot resolve below a few ulps
  const double route_tol = std::max(1e-13, std::min(1e-7, o.tol * 1e-2));
  std::vector<std::pair<std::string, double>> routes;
  routes.emplace_back("graph", ursell_graph_sum(m, o.beta));
  routes.emplace_back("partition", ursell_partition_sum(m, o.beta));
  if (n <= kMaxTreeIntegralSize) {
    routes.emplace_back("tree", ursell_tree_integral(m, o.beta, route_tol));
    routes.emplace_back("merge", merge_sequence_expansion(m, o.beta, route_tol));
  }

  struct PairDiff {
    std::string name;
    double rel = 0.0;
  };
  std::vector<PairDiff> pairs;
  for (std::size_t i = 0; i < routes.size(); ++i)
    for (std::size_t j = i + 1; j < routes.size(); ++j) {
      const double x = routes[i].second;
      const double y = routes[j].second;
      const double scale = std::max(std::abs(x), std::abs(y));
      pairs.push_back({routes[i].first + "-" + routes[j].first, scale > 0.0 ? std::abs(x - y) / scale : 0.0});
    }
  const auto worst = std::max_element(pairs.begin(), pairs.end(),
                                      [](const PairDiff& a, const PairDiff& b) { return a.rel < b.rel; });
  const bool agree = worst == pairs.end() || worst->rel <= o.tol;

  std::ostringstream text;
  if (fmt.format == "json") {
    json j;
    j["n"] = n;
    j["beta"] = o.beta;
    j["seed"] = o.seed;
    j["tol"] = o.tol;
    j["routes"] = json::object();
    for (const auto& [name, value] : routes) j["routes"][name] = json_number(value);
    j["pairs"] = json::array();
    for (const PairDiff& p : pairs) j["pairs"].push_back({{"pair", p.name}, {"rel_diff", p.rel}});
    if (worst != pairs.end()) j["worst"] = {{"pair", worst->name}, {"rel_diff", worst->rel}};
    j["agree"] = agree;
    text << j.dump(2) << "\n";
  } else if (fmt.format == "csv") {
    text << "kind,name,value\n";
    for (const auto& [name, value] : routes) text << "route," << name << ',' << std::setprecision(17) << value << '\n';
    for (const PairDiff& p : pairs) text << "rel_diff," << p.name << ',' << std::setprecision(17) << p.rel << '\n';
  } else {
    text << "n " << n << "  beta " << format_sig(o.beta) << "  seed " << o.seed << "\n\n";
    for (const auto& [name, value] : routes) text << std::left << std::setw(22) << name << format_sig(value) << "\n";
    text << "\n";
    for (const PairDiff& p : pairs) text << std::left << std::setw(22) << p.name << format_sig(p.rel, 3) << "\n";
    if (worst != pairs.end())
      text << "\nworst " << worst->name << " " << format_sig(worst->rel, 3) << " (tol " << format_sig(o.tol, 3)
           << "): " << (agree ? "agree" : "DISAGREE") << "\n";
  }
  emit(fmt, text.str(), out);
  if (!agree) err << "routes disagree: " << worst->name << " relative difference " << worst->rel << "\n";
  return agree ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// criterion

struct CriterionOptions {
  std::string potential = "lj";
  std::optional<double> a;
  CutOptions cut;
};

int cmd_criterion(const CriterionOptions& o, const Output& fmt, std::ostream& out) {
  const PairPotential v = parse_potential(o.potential);
  const ResolvedCut c = resolve_cut(v, o.cut);
  double a = 0.0;
  bool searched = false;
  if (o.a) {
    a = *o.a;
  } else {
    a = find_max_a(v, c.selector, c.lo, c.hi, o.cut.tol);
    searched = true;
  }
  const MuBound mu = mu_upper(v, c.selector, a);
  const bool holds = criterion_holds(v, a, mu);

  std::ostringstream text;
  if (fmt.format == "json") {
    json j = {{"potential", potential_to_json(v)},
              {"method", to_string(mu.method)},
              {"a", a},
              {"mu_bound", json_number(mu.value)},
              {"V_a", json_number(v(a))},
              {"holds", holds}};
    if (searched) j["interval"] = {c.lo, c.hi}, j["tol"] = o.cut.tol;
    text << j.dump(2) << "\n";
  } else if (fmt.format == "csv") {
    text << "potential,method,a,mu_bound,V_a,holds\n"
         << v.kind() << ',' << to_string(mu.method) << ',' << std::setprecision(17) << a << ',' << mu.value << ','
         << v(a) << ',' << (holds ? "true" : "false") << '\n';
  } else {
    text << "potential " << v.kind() << "  method " << to_string(mu.method) << "\n";
    if (searched)
      text << "interval [" << format_sig(c.lo) << ", " << format_sig(c.hi) << "]  tol " << format_sig(o.cut.tol, 3)
           << "\n";
    text << (searched ? "largest a " : "a ") << format_sig(a) << "\n"
         << "V(a)      " << format_sig(v(a)) << "\n"
         << "mu(a) <=  " << format_sig(mu.value) << "\n"
         << "V(a) > 2 mu(a): " << (holds ? "holds" : "not certified") << "\n";
  }
  emit(fmt, text.str(), out);
  return holds ? kOk : kCheckFailed;
}

// ---------------------------------------------------------------------------
// bounds

struct BoundsOptions {
  std::string potential = "lj";
  double beta = 1.0;
  std::optional<double> a;
  std::optional<double> b_lower;
  std::optional<double> b_upper;
  std::optional<double> bbar_factor;
  double rel_tol = 1e-8;
  CutOptions cut;
};

StabilityData stability_for(const PairPotential& v, const BoundsOptions& o) {
  if (v.is_lennard_jones()) {
    const StabilityData lj = lj_stability_registry();
    return StabilityData(o.b_lower.value_or(lj.b_lower()), o.b_upper.value_or(lj.b_upper()),
                         o.bbar_factor.value_or(lj.bbar_factor()),
                         o.b_lower ? "user" : lj.b_lower_source(), o.b_upper ? "user" : lj.b_upper_source(),
                         o.bbar_factor ? "user" : lj.bbar_factor_source());
  }
  const double factor = o.bbar_factor.value_or(kGeneralBbarFactor);
  const std::string factor_source = o.bbar_factor ? "user" : "Bbar <= 13/12 B for every stable potential";
  if (o.b_upper)
    return StabilityData(o.b_lower.value_or(0.0), *o.b_upper, factor, o.b_lower ? "user" : "default 0", "user",
                         factor_source);
  if (o.b_lower) return StabilityData(*o.b_lower, *o.b_lower, factor, "user", "user (B_lower)", factor_source);
  if (!sampled_nonnegative(v)) throw UsageError("--b-upper is required for potentials with an attractive part");
  return StabilityData(0.0, 0.0, factor, "V >= 0", "V >= 0", factor_source);
}

int cmd_bounds(const BoundsOptions& o, const Output& fmt, std::ostream& out, std::ostream& err) {
  if (!(o.beta >= 0.0) || !std::isfinite(o.beta)) throw UsageError("--beta must be finite and >= 0");
  if (!(o.rel_tol > 0.0)) throw UsageError("--tol must be > 0");
  const PairPotential v = parse_potential(o.potential);
  const StabilityData stability = stability_for(v, o);
  double a = 0.0;
  if (o.a) {
    a = *o.a;
  } else if (!is_identically_zero(v)) {
    if (o.cut.method.empty() && !v.is_lennard_jones() && !sampled_nonnegative(v))
      throw UsageError("--a is required (or --method to search for the largest certified a)");
    const ResolvedCut c = resolve_cut(v, o.cut);
    a = find_max_a(v, c.selector, c.lo, c.hi, o.cut.tol);
    err << "a = " << std::setprecision(10) << a << " (largest a certified by " << to_string(c.selector.method)
        << ")\n";
  }
  QuadratureSpec spec;
  spec.rel_tol = o.rel_tol;
  const BoundReport r = compare_report(v, o.beta, a, stability, spec);
  std::string text;
  if (fmt.format == "json")
    text = report_to_json(r).dump(2) + "\n";
  else if (fmt.format == "csv")
    text = report_to_csv(r);
  else
    text = report_to_table(r);
  emit(fmt, text, out);
  return kOk;
}

// ---------------------------------------------------------------------------
// reproduce

int cmd_reproduce(const std::string& section, const Output& fmt, std::ostream& out) {
  const Reproduction r = reproduce(section);
  std::string text;
  if (fmt.format == "json")
    text = reproduction_to_json(r).dump(2) + "\n";
  else if (fmt.format == "csv")
    text = reproduction_to_csv(r);
  else
    text = reproduction_to_table(r);
  emit(fmt, text, out);
  return r.ok() ? kOk : kCheckFailed;
}

void add_cut_options(CLI::App* cmd, CutOptions& cut) {
  cmd->add_option("--method", cut.method, "mu(a) bound: cube, yuhjtman (LJ literature) or user")
      ->check(CLI::IsMember({"cube", "cube-packing", "yuhjtman", "lj-literature", "user"}));
  cmd->add_option("--interval", cut.interval, "search interval lo:hi for the cut radius");
  cmd->add_option("--envelope", cut.envelope, "LJ-type envelope JSON for --method cube");
  cmd->add_option("--mu-constant", cut.mu_constant, "K in mu(a) <= K / a^d for --method user");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ursell-function identities and convergence-radius bounds for the Mayer series", "mayer"};
  app.require_subcommand(1);
  Output fmt;
  app.add_option("--format", fmt.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", fmt.path, "write the report to this file");

  IdentityOptions identity;
  auto* id = app.add_subcommand("identity", "evaluate phi_beta([n]) by every route on a random matrix");
  id->fallthrough();
  id->add_option("--n", identity.n, "number of particles");
  id->add_option("--beta", identity.beta, "inverse temperature");
  id->add_option("--seed", identity.seed, "matrix seed");
  id->add_option("--tol", identity.tol, "relative agreement tolerance");
  id->add_option("--matrix", identity.matrix, "interaction matrix JSON instead of a random one");

  CriterionOptions criterion;
  auto* cr = app.add_subcommand("criterion", "largest a with V(a) > 2 mu(a)");
  cr->fallthrough();
  cr->add_option("--potential", criterion.potential, "lj, zero, inline JSON or a JSON file");
  cr->add_option("--a", criterion.a, "check this cut radius instead of searching");
  cr->add_option("--tol", criterion.cut.tol, "bisection tolerance");
  add_cut_options(cr, criterion.cut);

  BoundsOptions bounds;
  auto* bd = app.add_subcommand("bounds", "integrals and convergence-radius lower bounds");
  bd->fallthrough();
  bd->add_option("--potential", bounds.potential, "lj, zero, inline JSON or a JSON file");
  bd->add_option("--beta", bounds.beta, "inverse temperature");
  bd->add_option("--a", bounds.a, "cut radius (searched for when omitted)");
  bd->add_option("--b-lower", bounds.b_lower, "lower bound on the stability constant B");
  bd->add_option("--b-upper", bounds.b_upper, "upper bound on B (used in the radii)");
  bd->add_option("--bbar-factor", bounds.bbar_factor, "bound on Bbar / B");
  bd->add_option("--tol", bounds.rel_tol, "relative quadrature tolerance");
  add_cut_options(bd, bounds.cut);

  std::string section = "all";
  auto* rp = app.add_subcommand("reproduce", "recompute the published LJ constants side by side");
  rp->fallthrough();
  rp->add_option("--section", section, "5.2, 5.3 or all")->check(CLI::IsMember({"5.2", "5.3", "all"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (id->parsed()) return cmd_identity(identity, fmt, out, err);
    if (cr->parsed()) return cmd_criterion(criterion, fmt, out);
    if (bd->parsed()) return cmd_bounds(bounds, fmt, out, err);
    return cmd_reproduce(section, fmt, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const NotBasuevError& e) {
    err << "not a Basuev split: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const NoValidRadiusError& e) {
    err << "no valid cut radius: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const ConvergenceError& e) {
    err << "numeric failure: " << e.what() << " (estimate " << e.estimate() << ", error " << e.error_estimate()
        << ")\n";
    return kNumeric;
  } catch (const TemperednessError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const OverflowError& e) {
    err << "numeric failure: " << e.what() << "\n";
    return kNumeric;
  } catch (const Error& e) {
    // size guards, domain errors, invalid arguments, method mismatches
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kNumeric;
  }
}

}  // namespace mayer::cli
