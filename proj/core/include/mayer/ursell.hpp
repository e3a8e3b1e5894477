#pragma once

// Three independent evaluations of the Ursell coefficient phi_beta([n]) for a
// pair interaction on [n]:
//
//   graph sum       sum over connected graphs g of prod_{ij in g} (e^{-beta V_ij} - 1)
//   partition sum   sum over partitions pi of (-1)^{|pi|-1} (|pi|-1)! e^{-beta sum_{A in pi} U(A)}
//   tree integral   (-1)^{n-1} int_simplex sum_{trees, labelings} prod V_ij
//                   exp(-sum_k (b_k - b_{k+1}) sum_{A in pi(tau_k)} U(A))
//
// plus the merge-sequence form the tree integral is derived from (see
// merge_sequences.hpp). Sums are accumulated in long double.

#include <vector>

#include "mayer/combinatorics.hpp"
#include "mayer/interaction_matrix.hpp"
#include "mayer/simplex.hpp"

namespace mayer {

inline constexpr int kMaxGraphSumSize = kMaxGraphSize;
inline constexpr int kMaxPartitionSumSize = 12;
inline constexpr int kMaxTreeIntegralSize = kMaxSimplexLevels + 1;

double ursell_graph_sum(const InteractionMatrix& m, double beta);

// Graph sum with e^{-beta V_ij} replaced by 0 on hard-core pairs (the H -> inf
// limit). Finite pairs use their stored values.
double ursell_graph_sum_hard_core_limit(const InteractionMatrix& m, double beta);

double ursell_partition_sum(const InteractionMatrix& m, double beta);

// c_k = sum over the blocks of pi(tau_k) of U(block), k = 1 .. n-1.
std::vector<double> tree_exponent_coefficients(const EdgeLabeledTree& t, const InteractionMatrix& m);

// tol is the relative tolerance of each simplex integral.
double ursell_tree_integral(const InteractionMatrix& m, double beta, double tol = 1e-6);

}  // namespace mayer
