#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mayer/combinatorics.hpp"

namespace mayer {

// Cutoff substituted for hard-core pairs when none is given explicitly.
// e^{-30} is about 1e-13, below round-off for unit-scale sums.
inline constexpr double kDefaultHardCoreCutoff = 30.0;

// A symmetric pair interaction V_ij on [n], stored on unordered pairs in
// edge_index order. Pairs may be flagged hard-core (V_ij = +inf); such pairs
// only evaluate once a finite cutoff H has been configured.
class InteractionMatrix {
 public:
  explicit InteractionMatrix(int n);

  // Entries i.i.d. uniform on [lo, hi) from a splitmix64 stream seeded with
  // `seed`, filled in edge_index order. Bit-reproducible across platforms.
  static InteractionMatrix random(int n, std::uint64_t seed, double lo = -1.0, double hi = 2.0);

  int size() const noexcept { return n_; }

  void set(int i, int j, double value);
  void set_hard_core(int i, int j);
  bool is_hard_core(int i, int j) const;
  bool has_hard_core() const noexcept;

  void set_cutoff(double H);
  std::optional<double> cutoff() const noexcept { return cutoff_; }

  // Effective V_ij: the stored value, or the cutoff on hard-core pairs.
  // Throws UnconfiguredCutoffError on a hard-core pair without cutoff.
  double operator()(int i, int j) const;

  // Stored finite value, ignoring the hard-core flag.
  double raw(int i, int j) const;

 private:
  int n_;
  std::vector<double> values_;
  std::vector<bool> hard_core_;
  std::optional<double> cutoff_;
};

// U(X) = sum of V_ij over unordered pairs inside X.
double subset_energy(const InteractionMatrix& m, VertexMask subset);

// W = sum of V_ij with i in first, j in second. The blocks must be disjoint
// and non-empty.
double block_pair_energy(const InteractionMatrix& m, VertexMask first, VertexMask second);

}  // namespace mayer
