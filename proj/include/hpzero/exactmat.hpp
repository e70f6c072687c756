#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "hpzero/rational.hpp"

namespace hpzero {

// Sparse matrix over Z.  No zero entries are stored.
struct SparseIntMatrix {
  int rows = 0;
  int cols = 0;
  std::map<std::pair<int, int>, Int> entries;

  void set(int r, int c, const Int& v);
  Int at(int r, int c) const;
  std::size_t nnz() const { return entries.size(); }
  SparseIntMatrix transpose() const;
};

// Clears denominators with a single matrix-wide lcm, so the integer matrix
// is a common positive multiple of the rational one (same rank).
SparseIntMatrix integer_matrix(int rows, int cols,
                               const std::vector<std::tuple<int, int, Rational>>& triples);

// Rank of the reduction mod p.  Always a lower bound for the rank over Q.
int rank_modular(const SparseIntMatrix& m, std::uint64_t p);

// Rank by fraction-free Bareiss elimination with full pivoting.  Exact but
// slower; exposed for tests.
int rank_bareiss(const SparseIntMatrix& m);

std::uint64_t random_rank_prime();

// Exact rank over Q.  Strategy: drop duplicate columns, compute the rank mod
// a random 62-bit prime, and accept it only when it already equals
// min(rows, cols) (a modular rank can never exceed the true rank, so a full
// modular rank is a certificate).  Otherwise fall back to Bareiss.
int rank_exact(const SparseIntMatrix& m);
int rank_exact(const SparseIntMatrix& m, std::uint64_t prime);

}  // namespace hpzero
