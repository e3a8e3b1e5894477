#pragma once

// Merge histories: starting from the singleton partition of [n], repeatedly
// fuse two blocks. A full history (n-1 merges) together with one crossing
// edge per merge is the same thing as an edge-labeled spanning tree; that
// bijection is what turns the merge-sequence expansion of phi_beta([n]) into
// the tree-graph form.

#include <functional>
#include <span>
#include <vector>

#include "mayer/combinatorics.hpp"
#include "mayer/interaction_matrix.hpp"

namespace mayer {

struct BlockPair {
  VertexMask first = 0;  // the block holding the smaller vertex
  VertexMask second = 0;

  static BlockPair of(VertexMask a, VertexMask b);
  VertexMask merged() const noexcept { return first | second; }

  friend bool operator==(const BlockPair&, const BlockPair&) = default;
};

class MergeState {
 public:
  explicit MergeState(int n);  // singletons, empty history

  int size() const noexcept { return n_; }
  int block_count() const noexcept { return static_cast<int>(blocks_.size()); }
  std::span<const VertexMask> blocks() const noexcept { return blocks_; }
  std::span<const BlockPair> history() const noexcept { return history_; }
  SetPartition partition() const;

  // Replaces the two blocks of `pair` by their union. Throws InvalidArgument
  // unless both are current blocks.
  void merge(const BlockPair& pair);
  MergeState merged(const BlockPair& pair) const;

  friend bool operator==(const MergeState&, const MergeState&) = default;

 private:
  int n_;
  std::vector<VertexMask> blocks_;  // ordered by smallest vertex
  std::vector<BlockPair> history_;
};

// Every complete history (n-1 merges), in lexicographic order of block-pair
// choices. (n choose 2)(n-1 choose 2)...(2 choose 2) histories in total.
void for_each_merge_sequence(int n, const std::function<void(const MergeState&)>& visit);

// The history whose k-th merge joins the components tau_{k-1} connects with
// the edge labeled k.
MergeState merge_state_from_tree(const EdgeLabeledTree& t);

// All edge-labeled trees (lambda_1, ..., lambda_{n-1}) with lambda_k crossing
// the k-th merged pair.
std::vector<EdgeLabeledTree> expand_merge_sequence(const MergeState& complete);

// (-1)^{n-1} int_simplex sum_sequences W_1 ... W_{n-1} exp(-sum_i b_i W_i).
double merge_sequence_expansion(const InteractionMatrix& m, double beta, double tol = 1e-6);

}  // namespace mayer
