#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pmsched/model.hpp"

namespace pmsched {

enum class ConvolutionBackend { Bitset, Fft };

/// Set of d-dimensional lattice points in {0..B}^d, stored as a dense
/// bit-array over the Kronecker index sum_t x_t * (B+1)^t.
class VectorSet {
 public:
  VectorSet(int dim, std::int64_t bound);

  int dim() const { return dim_; }
  std::int64_t bound() const { return bound_; }

  void insert(std::span<const std::int64_t> point);
  bool contains(std::span<const std::int64_t> point) const;
  std::size_t size() const;
  bool empty() const { return size() == 0; }

  std::vector<std::vector<std::int64_t>> points() const;

  /// Same point set re-encoded with a larger per-coordinate bound.
  VectorSet widened(std::int64_t new_bound) const;

  std::size_t capacity() const { return capacity_; }
  const std::vector<std::uint64_t>& words() const { return bits_; }
  void set_index(std::size_t idx);
  bool test_index(std::size_t idx) const;
  std::size_t index_of(std::span<const std::int64_t> point) const;
  std::vector<std::int64_t> point_at(std::size_t idx) const;

 private:
  int dim_;
  std::int64_t bound_;
  std::size_t capacity_;  // (bound+1)^dim
  std::vector<std::uint64_t> bits_;
};

/// {x + y : x in X, y in Y}, computed by convolving Kronecker-encoded
/// indicator arrays with stride (X.bound + Y.bound + 1) per coordinate.
VectorSet minkowski_sum(const VectorSet& x, const VectorSet& y,
                        ConvolutionBackend backend = ConvolutionBackend::Bitset);

/// X^d(J'): all (P(J'_1),...,P(J'_d)) over pairwise-disjoint (not necessarily
/// covering) subsets of J'. Balanced divide-and-conquer over Minkowski sums.
VectorSet load_distribution(std::span<const Job> jobs, int d,
                            ConvolutionBackend backend = ConvolutionBackend::Bitset);

/// Per class i: all m-tuples (P(J_i^1),...,P(J_i^m)) over partitions of J_i.
struct ClassDistributions {
  std::vector<std::vector<std::vector<std::int64_t>>> per_class;
};

ClassDistributions class_distributions(const Instance& inst, const EfficiencyClasses& classes,
                                       ConvolutionBackend backend = ConvolutionBackend::Bitset);

}  // namespace pmsched
