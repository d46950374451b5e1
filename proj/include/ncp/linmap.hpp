#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncp/category.hpp"
#include "ncp/partition.hpp"

namespace ncp {

// The 0/1 linear map attached to a partition p in P(k, l) for a fixed
// dimension N: an N^l x N^k matrix whose (j, i) entry is 1 iff the index
// assignment (i on the upper row, j on the lower row) is constant on every
// block. Colours play no role. Multi-indices are big-endian: the leftmost
// tensor factor is the most significant digit.
struct TpMatrix {
  Partition p;
  int N = 0;
  std::uint64_t rows = 0, cols = 0;
  // Nonzero positions (row, col), sorted lexicographically; all values are 1.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> nz;
};

// Throws std::length_error if N^{number of blocks} exceeds the entry cap.
TpMatrix tp_matrix(const Partition& p, int N, std::uint64_t nz_cap = 10000000);

// Exact integer check of  T_q . T_p == N^{loops} . T_{qp}  for the vertical
// composition with p on top of q.
bool check_composition(const Partition& q, const Partition& p, int N);

// Number of blocks of the join (common refinement-free least upper bound) of
// two partitions with identical row shapes.
int join_block_count(const Partition& a, const Partition& b);

struct MorDim {
  std::size_t count = 0;  // members of C(w, w')
  std::size_t rank = 0;   // exact rank of their stacked vectorized matrices
};

// Exact rank over the rationals of {vec T_p : p in C(w, w')}, computed from
// the integer Gram matrix <T_p, T_q> = N^{join blocks} by fraction-free
// elimination.
MorDim mor_dimension(const Category& cat, const Word& w, const Word& wp, int N);

// Rank of the span of the T_p for an explicit partition list (all with the
// same row shapes).
std::size_t tp_span_rank(const std::vector<Partition>& ps, int N);

}  // namespace ncp
