#include "mayer/merge_sequences.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "mayer/errors.hpp"
#include "mayer/simplex.hpp"

namespace mayer {

namespace {

bool before(VertexMask a, VertexMask b) { return std::countr_zero(a) < std::countr_zero(b); }

}  // namespace

BlockPair BlockPair::of(VertexMask a, VertexMask b) {
  if (a == 0 || b == 0 || (a & b) != 0) throw InvalidArgument("BlockPair: blocks must be disjoint and non-empty");
  return before(a, b) ? BlockPair{a, b} : BlockPair{b, a};
}

MergeState::MergeState(int n) : n_(n) {
  if (n < 1 || n > 31) throw InvalidArgument("MergeState: n must be in [1, 31]");
  for (int v = 0; v < n; ++v) blocks_.push_back(VertexMask{1} << v);
}

SetPartition MergeState::partition() const { return SetPartition(n_, blocks_); }

void MergeState::merge(const BlockPair& pair) {
  const auto first = std::find(blocks_.begin(), blocks_.end(), pair.first);
  const auto second = std::find(blocks_.begin(), blocks_.end(), pair.second);
  if (first == blocks_.end() || second == blocks_.end() || first == second)
    throw InvalidArgument("MergeState::merge: " + mask_to_string(pair.first) + " and " + mask_to_string(pair.second) +
                          " are not two blocks of the current partition");
  *first = pair.merged();
  blocks_.erase(second);
  std::sort(blocks_.begin(), blocks_.end(), before);
  history_.push_back(BlockPair::of(pair.first, pair.second));
}

MergeState MergeState::merged(const BlockPair& pair) const {
  MergeState next = *this;
  next.merge(pair);
  return next;
}

namespace {

void extend(const MergeState& state, const std::function<void(const MergeState&)>& visit) {
  if (state.block_count() == 1) {
    visit(state);
    return;
  }
  const auto blocks = state.blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) extend(state.merged(BlockPair{blocks[i], blocks[j]}), visit);
}

}  // namespace

void for_each_merge_sequence(int n, const std::function<void(const MergeState&)>& visit) {
  if (n < 1 || n > kMaxTreeSize) throw SizeLimitError("for_each_merge_sequence: n outside [1, 8]");
  extend(MergeState(n), visit);
}

MergeState merge_state_from_tree(const EdgeLabeledTree& t) {
  MergeState state(t.size());
  for (const Edge& e : t.edges()) {
    VertexMask a = 0;
    VertexMask b = 0;
    for (VertexMask block : state.blocks()) {
      if ((block >> e.u) & 1U) a = block;
      if ((block >> e.v) & 1U) b = block;
    }
    state.merge(BlockPair::of(a, b));
  }
  return state;
}

std::vector<EdgeLabeledTree> expand_merge_sequence(const MergeState& complete) {
  const int n = complete.size();
  if (complete.block_count() != 1) throw InvalidArgument("expand_merge_sequence: history is not complete");
  const auto history = complete.history();
  std::vector<EdgeLabeledTree> out;
  std::vector<Edge> edges(history.size());
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == history.size()) {
      out.emplace_back(n, edges);
      return;
    }
    for (VertexMask a = history[k].first; a != 0; a &= a - 1)
      for (VertexMask b = history[k].second; b != 0; b &= b - 1) {
        edges[k] = Edge::of(std::countr_zero(a), std::countr_zero(b));
        self(self, k + 1);
      }
  };
  rec(rec, 0);
  return out;
}

double merge_sequence_expansion(const InteractionMatrix& m, double beta, double tol) {
  if (!(beta >= 0.0) || !std::isfinite(beta)) throw DomainError("beta must be finite and >= 0");
  const int n = m.size();
  if (n < 1 || n > kMaxSimplexLevels + 1) {
    std::ostringstream os;
    os << "merge_sequence_expansion: n = " << n << " outside supported range [1, " << kMaxSimplexLevels + 1 << "]";
    throw SizeLimitError(os.str());
  }
  if (n == 1) return 1.0;
  if (beta == 0.0) return 0.0;
  long double sum = 0.0L;
  std::vector<double> w(static_cast<std::size_t>(n) - 1);
  for_each_merge_sequence(n, [&](const MergeState& s) {
    long double product = 1.0L;
    for (std::size_t i = 0; i < w.size(); ++i) {
      w[i] = block_pair_energy(m, s.history()[i].first, s.history()[i].second);
      product *= w[i];
    }
    if (product == 0.0L) return;
    sum += product * ordered_simplex_linear_integral(w, beta, tol);
  });
  return static_cast<double>((n % 2 == 0) ? -sum : sum);
}

}  // namespace mayer
