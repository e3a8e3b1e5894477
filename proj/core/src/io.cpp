#include "mayer/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "mayer/errors.hpp"

namespace mayer {

using nlohmann::json;

namespace {

int index_from(const json& v, int n, const char* what) {
  if (!v.is_number_integer()) throw InvalidArgument(std::string("matrix: ") + what + " index must be an integer");
  const int i = v.get<int>();
  if (i < 1 || i > n) throw InvalidArgument(std::string("matrix: ") + what + " index outside [1, n]");
  return i - 1;
}

double number_from(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number())
    throw InvalidArgument(std::string("potential: missing numeric field \"") + key + "\"");
  return j.at(key).get<double>();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

json parse_json(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidArgument("invalid JSON in " + where + ": " + e.what());
  }
}

std::string csv_number(double x) {
  if (!std::isfinite(x)) return format_sig(x);
  std::ostringstream os;
  os << std::setprecision(17) << x;
  return os.str();
}

}  // namespace

InteractionMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw InvalidArgument("matrix: expected an object with integer \"n\"");
  const int n = j.at("n").get<int>();
  InteractionMatrix m(n);
  if (j.contains("entries")) {
    for (const json& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3 || !e[2].is_number())
        throw InvalidArgument("matrix: entries must be [i, j, value]");
      m.set(index_from(e[0], n, "entry"), index_from(e[1], n, "entry"), e[2].get<double>());
    }
  }
  if (j.contains("hard_core_pairs")) {
    for (const json& e : j.at("hard_core_pairs")) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("matrix: hard_core_pairs must be [i, j]");
      m.set_hard_core(index_from(e[0], n, "hard-core"), index_from(e[1], n, "hard-core"));
    }
    m.set_cutoff(j.contains("cutoff") ? j.at("cutoff").get<double>() : kDefaultHardCoreCutoff);
  }
  return m;
}

json matrix_to_json(const InteractionMatrix& m) {
  json entries = json::array();
  json hard = json::array();
  for (int i = 0; i < m.size(); ++i)
    for (int k = i + 1; k < m.size(); ++k) {
      if (m.is_hard_core(i, k))
        hard.push_back({i + 1, k + 1});
      else if (m.raw(i, k) != 0.0)
        entries.push_back({i + 1, k + 1, m.raw(i, k)});
    }
  json out = {{"n", m.size()}, {"entries", entries}};
  if (!hard.empty()) {
    out["hard_core_pairs"] = hard;
    if (m.cutoff()) out["cutoff"] = *m.cutoff();
  }
  return out;
}

InteractionMatrix load_matrix(const std::string& path) { return matrix_from_json(parse_json(read_file(path), path)); }

PairPotential potential_from_json(const json& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
    throw InvalidArgument("potential: expected an object with string \"kind\"");
  const std::string kind = j.at("kind").get<std::string>();
  const int d = j.contains("d") ? j.at("d").get<int>() : 3;
  if (kind == "lennard-jones") {
    if (d != 3) throw InvalidArgument("potential: lennard-jones is defined for d = 3");
    return PairPotential::lennard_jones();
  }
  if (kind == "inverse-power") return PairPotential::inverse_power(number_from(j, "C"), number_from(j, "p"), d);
  if (kind == "zero") return PairPotential::zero(d);
  if (kind == "hard-core") {
    const PairPotential tail = j.contains("tail") ? potential_from_json(j.at("tail")) : PairPotential::zero(d);
    return hard_core_wrap(tail, number_from(j, "a"), number_from(j, "H"));
  }
  if (kind == "tabulated") {
    if (!j.contains("knots") || !j.at("knots").is_array()) throw InvalidArgument("potential: tabulated needs knots");
    std::vector<std::pair<double, double>> knots;
    for (const json& k : j.at("knots")) {
      if (!k.is_array() || k.size() != 2 || !k[0].is_number() || !k[1].is_number())
        throw InvalidArgument("potential: knots must be [r, V] pairs");
      knots.emplace_back(k[0].get<double>(), k[1].get<double>());
    }
    return PairPotential::tabulated(std::move(knots), d);
  }
  throw InvalidArgument("potential: unknown kind '" + kind + "'");
}

json potential_to_json(const PairPotential& v) {
  json out = {{"kind", v.kind()}, {"d", v.dimension()}};
  for (const auto& [name, value] : v.parameters()) out[name] = json_number(value);
  if (const PairPotential* inner = v.model().wrapped()) out["tail"] = potential_to_json(*inner);
  return out;
}

PairPotential parse_potential(const std::string& source) {
  if (source == "lj" || source == "lennard-jones") return PairPotential::lennard_jones();
  if (source == "zero") return PairPotential::zero();
  if (!source.empty() && source.front() == '{') return potential_from_json(parse_json(source, "--potential"));
  return potential_from_json(parse_json(read_file(source), source));
}

json json_number(double x) {
  if (std::isfinite(x)) return x;
  if (std::isnan(x)) return "nan";
  return x > 0 ? "inf" : "-inf";
}

std::string format_sig(double x, int digits) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

namespace {

json estimate_json(const Estimate& e) { return {{"value", json_number(e.value)}, {"error", json_number(e.error)}}; }

json pieces_json(const IntegralPieces& p) {
  return {{"inner", estimate_json(p.inner)}, {"outer", estimate_json(p.outer)}, {"total", estimate_json(p.total())}};
}

struct RadiusRow {
  const char* name;
  Estimate integral;
  const IntegralPieces* pieces;
  double radius;
};

std::vector<RadiusRow> radius_rows(const BoundReport& r) {
  return {{"R_pr", r.C_pr, nullptr, r.R_pr},
          {"R_mps", r.C_tilde.total(), &r.C_tilde, r.R_mps},
          {"R_star", r.C_star.total(), &r.C_star, r.R_star},
          {"R_hat", r.C_hat.total(), &r.C_hat, r.R_hat}};
}

}  // namespace

json report_to_json(const BoundReport& r) {
  json ratios = json::object();
  for (const auto& [name, value] : r.ratios) ratios[name] = json_number(value);
  json provenance = json::object();
  for (const auto& [name, text] : r.provenance) provenance[name] = text;
  return {{"potential", r.potential},
          {"beta", r.beta},
          {"a", r.a},
          {"V_a", json_number(r.v_at_a)},
          {"B_used", r.B_used},
          {"Bbar_used", r.Bbar_used},
          {"C_pr", estimate_json(r.C_pr)},
          {"C_tilde", pieces_json(r.C_tilde)},
          {"C_star", pieces_json(r.C_star)},
          {"C_hat", pieces_json(r.C_hat)},
          {"radii",
           {{"R_pr", json_number(r.R_pr)},
            {"R_mps", json_number(r.R_mps)},
            {"R_star", json_number(r.R_star)},
            {"R_hat", json_number(r.R_hat)},
            {"R_basuev", json_number(r.R_basuev)}}},
          {"ratios", ratios},
          {"provenance", provenance}};
}

std::string report_to_csv(const BoundReport& r) {
  std::ostringstream os;
  os << "bound,integral,integral_error,inner,outer,radius\n";
  for (const RadiusRow& row : radius_rows(r)) {
    os << row.name << ',' << csv_number(row.integral.value) << ',' << csv_number(row.integral.error) << ',';
    if (row.pieces) os << csv_number(row.pieces->inner.value) << ',' << csv_number(row.pieces->outer.value);
    else os << ',';
    os << ',' << csv_number(row.radius) << '\n';
  }
  return os.str();
}

std::string report_to_table(const BoundReport& r) {
  std::ostringstream os;
  os << "potential " << r.potential << "  beta " << format_sig(r.beta) << "  a " << format_sig(r.a) << "  V(a) "
     << format_sig(r.v_at_a) << "\n";
  os << "B " << format_sig(r.B_used) << "  Bbar " << format_sig(r.Bbar_used) << "\n\n";
  os << std::left << std::setw(10) << "bound" << std::setw(14) << "integral" << std::setw(14) << "inner"
     << std::setw(14) << "outer" << std::setw(14) << "radius" << "\n";
  for (const RadiusRow& row : radius_rows(r)) {
    os << std::setw(10) << row.name << std::setw(14) << format_sig(row.integral.value) << std::setw(14)
       << (row.pieces ? format_sig(row.pieces->inner.value) : "-") << std::setw(14)
       << (row.pieces ? format_sig(row.pieces->outer.value) : "-") << std::setw(14) << format_sig(row.radius)
       << "\n";
  }
  os << "\nR_basuev = max(R_star, R_hat) = " << format_sig(r.R_basuev) << "\n";
  for (const auto& [name, value] : r.ratios) os << name << " = " << format_sig(value) << "\n";
  return os.str();
}

json reproduction_to_json(const Reproduction& r) {
  json rows = json::array();
  for (const ReproductionRow& row : r.rows)
    rows.push_back({{"name", row.reference.name},
                    {"section", row.reference.section},
                    {"computed", json_number(row.computed)},
                    {"paper", row.reference.printed},
                    {"rel_diff", json_number(row.rel_diff)},
                    {"status", to_string(row.status)},
                    {"citation", row.reference.citation}});
  return rows;
}

std::string reproduction_to_csv(const Reproduction& r) {
  std::ostringstream os;
  os << "section,name,computed,paper,rel_diff,status\n";
  for (const ReproductionRow& row : r.rows)
    os << row.reference.section << ",\"" << row.reference.name << "\"," << csv_number(row.computed) << ','
       << csv_number(row.reference.printed) << ',' << csv_number(row.rel_diff) << ',' << to_string(row.status)
       << '\n';
  return os.str();
}

std::string reproduction_to_table(const Reproduction& r) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "sec" << std::setw(42) << "quantity" << std::setw(14) << "computed"
     << std::setw(14) << "printed" << std::setw(12) << "rel.diff" << "status\n";
  for (const ReproductionRow& row : r.rows)
    os << std::setw(6) << row.reference.section << std::setw(42) << row.reference.name << std::setw(14)
       << format_sig(row.computed) << std::setw(14) << format_sig(row.reference.printed) << std::setw(12)
       << format_sig(row.rel_diff, 3) << to_string(row.status) << "\n";
  for (const std::string& note : r.notes) os << "note: " << note << "\n";
  return os.str();
}

}  // namespace mayer
