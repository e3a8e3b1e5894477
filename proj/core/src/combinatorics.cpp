#include "mayer/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <mutex>
#include <numeric>
#include <sstream>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

void require_size(const char* what, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    std::ostringstream os;
    os << what << ": n = " << n << " outside supported range [" << lo << ", " << hi << "]";
    throw SizeLimitError(os.str());
  }
}

VertexMask bit(int v) { return VertexMask{1} << v; }

int lowest_vertex(VertexMask m) { return std::countr_zero(m); }

}  // namespace

Edge Edge::of(int a, int b) {
  if (a == b) throw InvalidArgument("self-loop {" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "}");
  return a < b ? Edge{a, b} : Edge{b, a};
}

int edge_index(int i, int j, int n) {
  if (i > j) std::swap(i, j);
  if (i < 0 || j >= n || i == j) throw InvalidArgument("edge_index: invalid pair");
  return i * (2 * n - i - 1) / 2 + (j - i - 1);
}

Edge edge_at(int index, int n) {
  if (index < 0 || index >= pair_count(n)) throw InvalidArgument("edge_at: index out of range");
  int i = 0;
  int row = n - 1;
  while (index >= row) {
    index -= row;
    ++i;
    --row;
  }
  return Edge{i, i + 1 + index};
}

std::string mask_to_string(VertexMask block) {
  std::string out = "{";
  bool first = true;
  for (VertexMask m = block; m != 0; m &= m - 1) {
    if (!first) out += ',';
    out += std::to_string(lowest_vertex(m) + 1);
    first = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// SetPartition

SetPartition::SetPartition(int n, std::vector<VertexMask> blocks) : n_(n), blocks_(std::move(blocks)) {
  if (n < 1 || n > 31) throw InvalidArgument("SetPartition: n must be in [1, 31]");
  VertexMask seen = 0;
  for (VertexMask b : blocks_) {
    if (b == 0) throw InvalidArgument("SetPartition: empty block");
    if ((seen & b) != 0) throw InvalidArgument("SetPartition: overlapping blocks");
    if ((b & ~full_mask(n)) != 0) throw InvalidArgument("SetPartition: block outside [n]");
    seen |= b;
  }
  if (seen != full_mask(n)) throw InvalidArgument("SetPartition: blocks do not cover [n]");
  std::sort(blocks_.begin(), blocks_.end(),
            [](VertexMask a, VertexMask b) { return lowest_vertex(a) < lowest_vertex(b); });
}

SetPartition SetPartition::singletons(int n) {
  std::vector<VertexMask> blocks;
  for (int v = 0; v < n; ++v) blocks.push_back(bit(v));
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_growth_string(std::span<const int> rgs) {
  const int n = static_cast<int>(rgs.size());
  std::vector<VertexMask> blocks;
  for (int v = 0; v < n; ++v) {
    const int b = rgs[v];
    if (b < 0 || b > static_cast<int>(blocks.size())) throw InvalidArgument("not a restricted-growth string");
    if (b == static_cast<int>(blocks.size())) blocks.push_back(0);
    blocks[b] |= bit(v);
  }
  return SetPartition(n, std::move(blocks));
}

int SetPartition::block_of(int v) const {
  for (int i = 0; i < block_count(); ++i)
    if ((blocks_[i] & bit(v)) != 0) return i;
  throw InvalidArgument("block_of: vertex outside [n]");
}

std::string SetPartition::to_string() const {
  std::string out = "{";
  for (int i = 0; i < block_count(); ++i) {
    if (i > 0) out += ',';
    out += mask_to_string(blocks_[i]);
  }
  return out + "}";
}

// Fills a SetPartition in place from a restricted-growth string, skipping the
// validating constructor on the hot path.
class PartitionWalker {
 public:
  explicit PartitionWalker(int n) { p_.n_ = n; }

  const SetPartition& load(const std::array<int, 32>& rgs, int n, int blocks) {
    p_.blocks_.assign(static_cast<std::size_t>(blocks), 0);
    for (int v = 0; v < n; ++v) p_.blocks_[rgs[v]] |= bit(v);
    return p_;
  }

 private:
  SetPartition p_;
};

void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit) {
  require_size("enumerate_partitions", n, 1, kMaxPartitionSize);
  // rgs[v] = block of v; top[v] = 1 + max(rgs[0..v]).
  std::array<int, 32> rgs{};
  std::array<int, 32> top{};
  top[0] = 1;
  for (int v = 1; v < n; ++v) top[v] = 1;
  PartitionWalker walker(n);
  while (true) {
    visit(walker.load(rgs, n, top[n - 1]));
    int v = n - 1;
    while (v > 0 && rgs[v] == top[v - 1]) --v;
    if (v == 0) return;
    ++rgs[v];
    top[v] = std::max(top[v - 1], rgs[v] + 1);
    for (int w = v + 1; w < n; ++w) {
      rgs[w] = 0;
      top[w] = top[v];
    }
  }
}

std::vector<SetPartition> enumerate_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

std::vector<std::uint64_t> partition_block_counts(int n) {
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for_each_partition(n, [&](const SetPartition& p) { ++counts[p.block_count()]; });
  return counts;
}

std::int64_t mobius_alternating_sum(int n) {
  require_size("mobius_alternating_sum", n, 2, kMaxMobiusSize);
  const auto counts = partition_block_counts(n);
  std::int64_t sum = 0;
  std::int64_t factorial = 1;  // (k-1)!
  for (int k = 1; k <= n; ++k) {
    if (k > 1 && __builtin_mul_overflow(factorial, std::int64_t{k - 1}, &factorial))
      throw OverflowError("mobius_alternating_sum: (k-1)! overflows int64");
    std::int64_t count = 0;
    if (__builtin_add_overflow(std::int64_t{0}, counts[k], &count) || count < 0)
      throw OverflowError("mobius_alternating_sum: block count overflows int64");
    std::int64_t term = 0;
    if (__builtin_mul_overflow(factorial, count, &term))
      throw OverflowError("mobius_alternating_sum: term overflows int64");
    if (k % 2 == 0) term = -term;
    if (__builtin_add_overflow(sum, term, &sum)) throw OverflowError("mobius_alternating_sum: sum overflows int64");
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Graphs

LabeledGraph::LabeledGraph(int n, EdgeMask edges) : n_(n), edges_(edges) {
  if (n < 1 || n > 8) throw InvalidArgument("LabeledGraph: n must be in [1, 8]");
  const int pairs = pair_count(n);
  if (pairs < 32 && (edges >> pairs) != 0) throw InvalidArgument("LabeledGraph: edge bit outside E_n");
}

LabeledGraph::LabeledGraph(int n, std::span<const Edge> edges) : LabeledGraph(n, EdgeMask{0}) {
  for (const Edge& e : edges) edges_ |= EdgeMask{1} << edge_index(e.u, e.v, n);
}

int LabeledGraph::edge_count() const noexcept { return std::popcount(edges_); }

std::vector<Edge> LabeledGraph::edges() const {
  std::vector<Edge> out;
  for (EdgeMask m = edges_; m != 0; m &= m - 1) out.push_back(edge_at(std::countr_zero(m), n_));
  return out;
}

bool LabeledGraph::has_edge(int i, int j) const { return (edges_ >> edge_index(i, j, n_)) & 1U; }

namespace {

// adjacency[v] = neighbours of v.
std::array<VertexMask, 8> adjacency(int n, EdgeMask edges) {
  std::array<VertexMask, 8> adj{};
  for (EdgeMask m = edges; m != 0; m &= m - 1) {
    const Edge e = edge_at(std::countr_zero(m), n);
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return adj;
}

VertexMask component_of(const std::array<VertexMask, 8>& adj, int start) {
  VertexMask reached = bit(start);
  VertexMask frontier = reached;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m != 0; m &= m - 1) next |= adj[lowest_vertex(m)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached;
}

// Same search, with a precomputed edge table, for the 2^21 sweep at n = 7.
struct EdgeTable {
  std::array<Edge, 28> edges{};
  int count = 0;
  explicit EdgeTable(int n) : count(pair_count(n)) {
    for (int k = 0; k < count; ++k) edges[k] = edge_at(k, n);
  }
};

bool connected_mask(int n, EdgeMask mask, const EdgeTable& table) {
  std::array<VertexMask, 8> adj{};
  for (EdgeMask m = mask; m != 0; m &= m - 1) {
    const Edge& e = table.edges[std::countr_zero(m)];
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
  return component_of(adj, 0) == full_mask(n);
}

}  // namespace

bool is_connected(const LabeledGraph& g) {
  return component_of(adjacency(g.size(), g.edge_mask()), 0) == full_mask(g.size());
}

SetPartition graph_partition(const LabeledGraph& g) {
  const auto adj = adjacency(g.size(), g.edge_mask());
  std::vector<VertexMask> blocks;
  VertexMask left = full_mask(g.size());
  while (left != 0) {
    const VertexMask c = component_of(adj, lowest_vertex(left));
    blocks.push_back(c);
    left &= ~c;
  }
  return SetPartition(g.size(), std::move(blocks));
}

const std::vector<EdgeMask>& connected_graph_masks(int n) {
  require_size("enumerate_connected_graphs", n, 1, kMaxGraphSize);
  static std::array<std::once_flag, kMaxGraphSize + 1> once;
  static std::array<std::vector<EdgeMask>, kMaxGraphSize + 1> cache;
  std::call_once(once[n], [n] {
    const EdgeTable table(n);
    const EdgeMask limit = EdgeMask{1} << pair_count(n);
    auto& out = cache[n];
    for (EdgeMask mask = 0; mask < limit; ++mask)
      if (connected_mask(n, mask, table)) out.push_back(mask);
  });
  return cache[n];
}

std::vector<LabeledGraph> enumerate_connected_graphs(int n) {
  const auto& masks = connected_graph_masks(n);
  std::vector<LabeledGraph> out;
  out.reserve(masks.size());
  for (EdgeMask m : masks) out.emplace_back(n, m);
  return out;
}

// ---------------------------------------------------------------------------
// Trees

EdgeLabeledTree::EdgeLabeledTree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > kMaxTreeSize) throw InvalidArgument("EdgeLabeledTree: n must be in [1, 8]");
  if (static_cast<int>(edges_.size()) != n - 1) throw InvalidArgument("EdgeLabeledTree: need exactly n-1 edges");
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) throw InvalidArgument("EdgeLabeledTree: vertex outside [n]");
    e = Edge::of(e.u, e.v);
  }
  if (!is_connected(LabeledGraph(n, std::span<const Edge>(edges_))))
    throw InvalidArgument("EdgeLabeledTree: edges do not form a spanning tree");
}

LabeledGraph EdgeLabeledTree::truncated(int k) const {
  if (k < 0 || k > n_ - 1) throw InvalidArgument("EdgeLabeledTree::truncated: k out of range");
  return LabeledGraph(n_, std::span<const Edge>(edges_.data(), static_cast<std::size_t>(k)));
}

std::vector<Edge> prufer_decode(std::span<const int> sequence, int n) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2) throw InvalidArgument("prufer_decode: length must be n-2");
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int s : sequence) {
    if (s < 0 || s >= n) throw InvalidArgument("prufer_decode: symbol outside [n]");
    ++degree[s];
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n) - 1);
  for (int s : sequence) {
    int leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back(Edge::of(leaf, s));
    --degree[leaf];
    --degree[s];
  }
  int u = -1;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) {
      if (u < 0) {
        u = v;
      } else {
        edges.push_back(Edge::of(u, v));
        break;
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

void for_each_labeled_tree(int n, TreeLabeling labeling, const std::function<void(const EdgeLabeledTree&)>& visit) {
  require_size("enumerate_labeled_trees", n, 2, labeling == TreeLabeling::all ? kMaxLabeledTreeSize : kMaxTreeSize);
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    std::vector<Edge> edges = prufer_decode(seq, n);
    if (labeling == TreeLabeling::canonical) {
      visit(EdgeLabeledTree(n, std::move(edges)));
    } else {
      do {
        visit(EdgeLabeledTree(n, edges));
      } while (std::next_permutation(edges.begin(), edges.end()));
    }
    int pos = n - 3;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) return;
    ++seq[pos];
  }
}

std::vector<EdgeLabeledTree> enumerate_labeled_trees(int n, TreeLabeling labeling) {
  std::vector<EdgeLabeledTree> out;
  for_each_labeled_tree(n, labeling, [&](const EdgeLabeledTree& t) { out.push_back(t); });
  return out;
}

}  // namespace mayer
