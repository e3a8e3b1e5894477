#pragma once

// Exact enumeration of set partitions, labeled graphs and edge-labeled trees on
// the vertex set {0, ..., n-1}. Vertices are 0-based in the API; the string
// forms print them 1-based, as is customary for [n] = {1, ..., n}.
//
// Canonical orders (stable, relied upon by golden tests):
//   partitions       restricted-growth strings, lexicographic
//   graphs           edge-subset bitmask, increasing; bit k is edge_at(k, n)
//   trees            Pruefer sequences, lexicographic; labelings follow
//                    std::next_permutation over the edges in lexicographic order

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace mayer {

using VertexMask = std::uint32_t;
using EdgeMask = std::uint32_t;

inline constexpr int kMaxPartitionSize = 13;
inline constexpr int kMaxGraphSize = 7;
inline constexpr int kMaxTreeSize = 8;
inline constexpr int kMaxLabeledTreeSize = 6;
inline constexpr int kMaxMobiusSize = 12;

struct Edge {
  int u = 0;
  int v = 0;

  // Normalizes so that u < v.
  static Edge of(int a, int b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Number of unordered pairs of [n].
constexpr int pair_count(int n) { return n * (n - 1) / 2; }

// Position of {i, j} in the lexicographic list of unordered pairs of [n].
int edge_index(int i, int j, int n);
Edge edge_at(int index, int n);

constexpr VertexMask full_mask(int n) { return n >= 32 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

std::string mask_to_string(VertexMask block);

class SetPartition {
 public:
  // Validates disjointness, non-emptiness and coverage of [n]; blocks are
  // stored ordered by their smallest element.
  SetPartition(int n, std::vector<VertexMask> blocks);

  static SetPartition singletons(int n);
  static SetPartition from_growth_string(std::span<const int> rgs);

  int size() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  std::span<const VertexMask> blocks() const noexcept { return blocks_; }

  // Index of the block containing vertex v.
  int block_of(int v) const;

  std::string to_string() const;

  friend bool operator==(const SetPartition&, const SetPartition&) = default;

 private:
  SetPartition() = default;
  friend class PartitionWalker;

  int n_ = 0;
  std::vector<VertexMask> blocks_;
};

// Visits every partition of [n] exactly once, in restricted-growth order.
// The reference handed to the visitor is only valid during the call.
void for_each_partition(int n, const std::function<void(const SetPartition&)>& visit);
std::vector<SetPartition> enumerate_partitions(int n);

// K[k] = number of partitions of [n] into exactly k blocks (K[0] = 0), counted
// by enumeration.
std::vector<std::uint64_t> partition_block_counts(int n);

// sum_k (-1)^(k-1) (k-1)! K^n_k in checked 64-bit arithmetic. Identically zero
// for n >= 2.
std::int64_t mobius_alternating_sum(int n);

class LabeledGraph {
 public:
  LabeledGraph(int n, EdgeMask edges);
  LabeledGraph(int n, std::span<const Edge> edges);

  int size() const noexcept { return n_; }
  EdgeMask edge_mask() const noexcept { return edges_; }
  int edge_count() const noexcept;
  std::vector<Edge> edges() const;
  bool has_edge(int i, int j) const;

  friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

 private:
  int n_;
  EdgeMask edges_;
};

bool is_connected(const LabeledGraph& g);
SetPartition graph_partition(const LabeledGraph& g);

std::vector<LabeledGraph> enumerate_connected_graphs(int n);

// Edge masks of the connected graphs on [n], computed once per n and shared.
const std::vector<EdgeMask>& connected_graph_masks(int n);

class EdgeLabeledTree {
 public:
  // edges[k] carries label k + 1. Throws InvalidArgument unless the edges form a
  // spanning tree of [n].
  EdgeLabeledTree(int n, std::vector<Edge> edges);

  int size() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // The forest made of the edges with labels 1..k (tau_k).
  LabeledGraph truncated(int k) const;

  friend bool operator==(const EdgeLabeledTree&, const EdgeLabeledTree&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

enum class TreeLabeling {
  canonical,  // one labeling per tree: edges in lexicographic order
  all,        // every bijection between edges and labels
};

std::vector<Edge> prufer_decode(std::span<const int> sequence, int n);

void for_each_labeled_tree(int n, TreeLabeling labeling,
                           const std::function<void(const EdgeLabeledTree&)>& visit);
std::vector<EdgeLabeledTree> enumerate_labeled_trees(int n,
                                                     TreeLabeling labeling = TreeLabeling::canonical);

}  // namespace mayer
