#include "mayer/interaction_matrix.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "mayer/errors.hpp"

namespace mayer {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string pair_name(int i, int j) { return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}"; }

}  // namespace

InteractionMatrix::InteractionMatrix(int n)
    : n_(n), values_(static_cast<std::size_t>(pair_count(n)), 0.0), hard_core_(values_.size(), false) {
  if (n < 1 || n > 31) throw InvalidArgument("InteractionMatrix: n must be in [1, 31]");
}

InteractionMatrix InteractionMatrix::random(int n, std::uint64_t seed, double lo, double hi) {
  InteractionMatrix m(n);
  std::uint64_t state = seed;
  for (auto& v : m.values_) {
    const double u = static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
    v = lo + (hi - lo) * u;
  }
  return m;
}

void InteractionMatrix::set(int i, int j, double value) {
  if (!std::isfinite(value)) throw InvalidArgument("InteractionMatrix::set: use set_hard_core for infinite entries");
  const int k = edge_index(i, j, n_);
  values_[k] = value;
  hard_core_[k] = false;
}

void InteractionMatrix::set_hard_core(int i, int j) { hard_core_[edge_index(i, j, n_)] = true; }

bool InteractionMatrix::is_hard_core(int i, int j) const { return hard_core_[edge_index(i, j, n_)]; }

bool InteractionMatrix::has_hard_core() const noexcept {
  for (bool h : hard_core_)
    if (h) return true;
  return false;
}

void InteractionMatrix::set_cutoff(double H) {
  if (!(H > 0.0) || !std::isfinite(H)) throw InvalidArgument("InteractionMatrix: cutoff H must be finite and > 0");
  cutoff_ = H;
}

double InteractionMatrix::operator()(int i, int j) const {
  const int k = edge_index(i, j, n_);
  if (!hard_core_[k]) return values_[k];
  if (!cutoff_) throw UnconfiguredCutoffError("hard-core pair " + pair_name(i, j) + " used without a cutoff H");
  return *cutoff_;
}

double InteractionMatrix::raw(int i, int j) const { return values_[edge_index(i, j, n_)]; }

double subset_energy(const InteractionMatrix& m, VertexMask subset) {
  if ((subset & ~full_mask(m.size())) != 0) throw InvalidArgument("subset_energy: subset outside [n]");
  double sum = 0.0;
  for (VertexMask a = subset; a != 0; a &= a - 1) {
    const int i = std::countr_zero(a);
    for (VertexMask b = a & (a - 1); b != 0; b &= b - 1) sum += m(i, std::countr_zero(b));
  }
  return sum;
}

double block_pair_energy(const InteractionMatrix& m, VertexMask first, VertexMask second) {
  if (first == 0 || second == 0) throw InvalidArgument("block_pair_energy: empty block");
  if ((first & second) != 0) throw InvalidArgument("block_pair_energy: blocks overlap");
  if (((first | second) & ~full_mask(m.size())) != 0) throw InvalidArgument("block_pair_energy: block outside [n]");
  double sum = 0.0;
  for (VertexMask a = first; a != 0; a &= a - 1)
    for (VertexMask b = second; b != 0; b &= b - 1) sum += m(std::countr_zero(a), std::countr_zero(b));
  return sum;
}

}  // namespace mayer
