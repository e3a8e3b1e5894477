#include "mayer/ursell.hpp"

#include <bit>
#include <cmath>
#include <sstream>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

void require_beta(double beta) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("beta must be finite and >= 0");
}

void require_size(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    std::ostringstream os;
    os << what << ": n = " << n << " outside supported range [" << lo << ", " << hi << "]";
    throw SizeLimitError(os.str());
  }
}

// prod over the edges of each connected graph, summed. Edge products are read
// from two half tables (low and high edge bits) so each graph costs one
// multiplication.
double connected_sum(int n, const std::vector<long double>& factor) {
  const auto& masks = connected_graph_masks(n);
  const int edges = pair_count(n);
  const int low_bits = edges / 2;
  const int high_bits = edges - low_bits;
  std::vector<long double> low(std::size_t{1} << low_bits);
  std::vector<long double> high(std::size_t{1} << high_bits);
  low[0] = high[0] = 1.0L;
  for (std::size_t s = 1; s < low.size(); ++s) low[s] = low[s & (s - 1)] * factor[std::countr_zero(s)];
  for (std::size_t s = 1; s < high.size(); ++s) high[s] = high[s & (s - 1)] * factor[low_bits + std::countr_zero(s)];
  const EdgeMask low_mask = (EdgeMask{1} << low_bits) - 1;
  long double sum = 0.0L;
  for (EdgeMask g : masks) sum += low[g & low_mask] * high[g >> low_bits];
  return static_cast<double>(sum);
}

}  // namespace

double ursell_graph_sum(const InteractionMatrix& m, double beta) {
  require_beta(beta);
  const int n = m.size();
  require_size("ursell_graph_sum", n, 1, kMaxGraphSumSize);
  std::vector<long double> factor(static_cast<std::size_t>(pair_count(n)));
  for (int k = 0; k < pair_count(n); ++k) {
    const Edge e = edge_at(k, n);
    factor[k] = std::expm1(-static_cast<long double>(beta) * m(e.u, e.v));
  }
  return connected_sum(n, factor);
}

double ursell_graph_sum_hard_core_limit(const InteractionMatrix& m, double beta) {
  require_beta(beta);
  const int n = m.size();
  require_size("ursell_graph_sum", n, 1, kMaxGraphSumSize);
  std::vector<long double> factor(static_cast<std::size_t>(pair_count(n)));
  for (int k = 0; k < pair_count(n); ++k) {
    const Edge e = edge_at(k, n);
    factor[k] = (m.is_hard_core(e.u, e.v) && beta > 0.0) ? -1.0L
                                                         : std::expm1(-static_cast<long double>(beta) * m.raw(e.u, e.v));
  }
  return connected_sum(n, factor);
}

double ursell_partition_sum(const InteractionMatrix& m, double beta) {
  require_beta(beta);
  const int n = m.size();
  require_size("ursell_partition_sum", n, 1, kMaxPartitionSumSize);

  // energy[S] = U(S) for every subset, built by peeling off the top vertex.
  std::vector<long double> energy(std::size_t{1} << n, 0.0L);
  for (std::size_t s = 1; s < energy.size(); ++s) {
    const int top = std::bit_width(s) - 1;
    const std::size_t rest = s & ~(std::size_t{1} << top);
    long double e = energy[rest];
    for (std::size_t r = rest; r != 0; r &= r - 1) e += m(top, std::countr_zero(r));
    energy[s] = e;
  }

  std::vector<long double> weight(static_cast<std::size_t>(n) + 1, 0.0L);  // (-1)^{k-1} (k-1)!
  long double factorial = 1.0L;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) factorial *= (k - 1);
    weight[k] = (k % 2 == 1) ? factorial : -factorial;
  }

  const long double b = beta;
  long double sum = 0.0L;
  for_each_partition(n, [&](const SetPartition& p) {
    long double u = 0.0L;
    for (VertexMask block : p.blocks()) u += energy[block];
    sum += weight[p.block_count()] * std::exp(-b * u);
  });
  return static_cast<double>(sum);
}

std::vector<double> tree_exponent_coefficients(const EdgeLabeledTree& t, const InteractionMatrix& m) {
  const int n = t.size();
  if (n != m.size()) throw InvalidArgument("tree_exponent_coefficients: tree and matrix sizes differ");
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(n) - 1);
  for (int k = 1; k <= n - 1; ++k) {
    const SetPartition components = graph_partition(t.truncated(k));
    double sum = 0.0;
    for (VertexMask block : components.blocks()) sum += subset_energy(m, block);
    c.push_back(sum);
  }
  return c;
}

double ursell_tree_integral(const InteractionMatrix& m, double beta, double tol) {
  require_beta(beta);
  const int n = m.size();
  require_size("ursell_tree_integral", n, 1, kMaxTreeIntegralSize);
  if (n == 1) return 1.0;
  if (beta == 0.0) return 0.0;
  long double sum = 0.0L;
  for_each_labeled_tree(n, TreeLabeling::all, [&](const EdgeLabeledTree& t) {
    long double product = 1.0L;
    for (const Edge& e : t.edges()) product *= m(e.u, e.v);
    if (product == 0.0L) return;
    const SimplexIntegrand s{tree_exponent_coefficients(t, m), beta};
    sum += product * simplex_exponential_integral(s, tol);
  });
  return static_cast<double>((n % 2 == 0) ? -sum : sum);
}

}  // namespace mayer
