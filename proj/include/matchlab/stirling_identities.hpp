#pragma once

#include <matchlab/poly1.hpp>

#include <vector>

namespace matchlab {

// Sum of evaluations (-1)^m (1/m) prod P_{w_i}(t_i) over all ordered
// sequences of disjoint non-empty blocks covering the g distinct values c,
// with non-negative weights summing to w. Zero whenever 0 <= w <= g-2.
// Duplicate c values are rejected.
Rational phi_sum(long g, long w, const std::vector<Rational>& c);

// Same total via unordered partitions times m! (independent route for
// cross-checking the enumeration).
Rational phi_sum_via_unordered(long g, long w, const std::vector<Rational>& c);

// Left side of the block-partition identity: for pairwise disjoint blocks of
// the given sizes, sum_r (-1)^(r-1)(r-1)! sum_{partitions of [g] into r parts}
// P_w(|C_{I_1}|, ..., |C_{I_r}|), with P_w over a product of symmetric groups.
// Zero whenever 0 <= w <= g-2.
Rational permutation_identity_lhs(const std::vector<long>& sizes, long w);

// The same quantity summed permutation-by-permutation: for each sigma of
// weight w over the disjoint union, sum_r (-1)^(r-1)(r-1)! Phi_r(sigma).
Rational permutation_identity_brute(const std::vector<long>& sizes, long w);

// A permutation over the disjoint union of blocks, as images on 0..N-1.
struct BlockPermutation {
  std::vector<long> image;        // permutation of 0..N-1
  std::vector<long> block_of;     // block index per element
  long g = 0;                     // number of blocks

  long weight() const;            // N - #cycles
};

// Number of blocks in the finest block partition preserved by sigma.
long finest_admitting_block_count(const BlockPermutation& sigma);

// Phi_r(sigma): partitions of [g] into r non-empty parts admitting sigma;
// equals S(m, r) for m the finest admitting block count.
Int admitting_partition_count(const BlockPermutation& sigma, long r);

// Same count by direct enumeration of r-part partitions (test oracle).
Int admitting_partition_count_enumerated(const BlockPermutation& sigma, long r);

// sum_{r=1}^m (-1)^(r-1) (r-1)! S(m, r): 1 for m = 1, else 0.
Rational alternating_stirling2(long m);

}  // namespace matchlab
