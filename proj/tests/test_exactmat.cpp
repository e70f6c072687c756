#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hpzero/exactmat.hpp"

using namespace hpzero;

namespace {

// Independent dense Gaussian elimination over Q, kept deliberately naive.
int rank_rational(const SparseIntMatrix& m) {
  std::vector<std::vector<Rational>> a(m.rows, std::vector<Rational>(m.cols, Rational(0)));
  for (const auto& [rc, v] : m.entries) a[rc.first][rc.second] = Rational(v);
  int rank = 0;
  for (int c = 0; c < m.cols && rank < m.rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < m.rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int r = rank + 1; r < m.rows; ++r) {
      if (a[r][c] == 0) continue;
      Rational f = a[r][c] / a[rank][c];
      for (int cc = c; cc < m.cols; ++cc) a[r][cc] -= f * a[rank][cc];
    }
    ++rank;
  }
  return rank;
}

SparseIntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int true_rank) {
  // Product of random rows x cols matrices of inner dimension true_rank.
  std::uniform_int_distribution<int> entry(-3, 3);
  std::vector<std::vector<long>> left(rows, std::vector<long>(true_rank));
  std::vector<std::vector<long>> right(true_rank, std::vector<long>(cols));
  for (auto& row : left)
    for (auto& v : row) v = entry(rng);
  for (auto& row : right)
    for (auto& v : row) v = entry(rng);
  SparseIntMatrix m;
  m.rows = rows;
  m.cols = cols;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      long sum = 0;
      for (int k = 0; k < true_rank; ++k) sum += left[r][k] * right[k][c];
      if (sum != 0) m.set(r, c, Int(sum));
    }
  return m;
}

}  // namespace

TEST_CASE("trivial matrices") {
  SparseIntMatrix zero;
  zero.rows = 4;
  zero.cols = 7;
  CHECK(rank_exact(zero) == 0);
  CHECK(rank_bareiss(zero) == 0);

  SparseIntMatrix id;
  id.rows = id.cols = 5;
  for (int i = 0; i < 5; ++i) id.set(i, i, Int(1));
  CHECK(rank_exact(id) == 5);
  CHECK(rank_bareiss(id) == 5);
  CHECK(rank_modular(id, 1000003) == 5);
}

TEST_CASE("set and at ignore zeros") {
  SparseIntMatrix m;
  m.rows = m.cols = 2;
  m.set(0, 0, Int(3));
  m.set(0, 0, Int(0));
  CHECK(m.nnz() == 0);
  CHECK(m.at(0, 0) == 0);
  m.set(1, 0, Int(-2));
  CHECK(m.at(1, 0) == -2);
  CHECK(m.transpose().at(0, 1) == -2);
}

TEST_CASE("rational triples clear denominators matrix-wide") {
  std::vector<std::tuple<int, int, Rational>> triples = {
      {0, 0, Rational(1, 2)}, {0, 1, Rational(1, 3)}, {1, 1, Rational(5)}};
  SparseIntMatrix m = integer_matrix(2, 2, triples);
  CHECK(m.at(0, 0) == 3);
  CHECK(m.at(0, 1) == 2);
  CHECK(m.at(1, 1) == 30);
  CHECK(rank_exact(m) == 2);
}

TEST_CASE("duplicate triples accumulate") {
  std::vector<std::tuple<int, int, Rational>> triples = {
      {0, 0, Rational(1, 2)}, {0, 0, Rational(-1, 2)}, {1, 0, Rational(1)}};
  SparseIntMatrix m = integer_matrix(2, 1, triples);
  CHECK(m.at(0, 0) == 0);
  CHECK(rank_exact(m) == 1);
}

TEST_CASE("rank matches an independent rational elimination") {
  std::mt19937 rng(20260822);
  for (int trial = 0; trial < 40; ++trial) {
    int rows = 1 + static_cast<int>(rng() % 8);
    int cols = 1 + static_cast<int>(rng() % 8);
    int inner = static_cast<int>(rng() % 5);
    SparseIntMatrix m = random_matrix(rng, rows, cols, inner);
    int expected = rank_rational(m);
    CAPTURE(trial);
    CHECK(rank_exact(m) == expected);
    CHECK(rank_bareiss(m) == expected);
    CHECK(rank_exact(m.transpose()) == expected);
  }
}

TEST_CASE("modular rank never exceeds the exact rank") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    SparseIntMatrix m = random_matrix(rng, 6, 6, 3);
    int exact = rank_exact(m);
    CHECK(rank_modular(m, random_rank_prime()) <= exact);
  }
}

TEST_CASE("rank collapses mod small primes but not mod random large ones") {
  SparseIntMatrix m;
  m.rows = m.cols = 2;
  m.set(0, 0, Int(1));
  m.set(0, 1, Int(1));
  m.set(1, 0, Int(1));
  m.set(1, 1, Int(1 + 5));
  CHECK(rank_modular(m, 5) == 1);
  CHECK(rank_exact(m) == 2);
}

TEST_CASE("entries too large for machine words still work") {
  Int huge(1);
  for (int i = 0; i < 5; ++i) huge *= Int(1000000007);
  SparseIntMatrix m;
  m.rows = m.cols = 2;
  m.set(0, 0, huge);
  m.set(0, 1, Int(1));
  m.set(1, 0, huge * Int(3));
  m.set(1, 1, Int(3));
  CHECK(rank_exact(m) == 1);
  CHECK(rank_bareiss(m) == 1);
  SparseIntMatrix full = m;
  full.set(1, 1, Int(4));
  CHECK(rank_exact(full) == 2);
}

TEST_CASE("random primes are large and distinct often enough") {
  std::uint64_t p = random_rank_prime();
  std::uint64_t q = random_rank_prime();
  CHECK(p > (1ULL << 61));
  CHECK(q > (1ULL << 61));
  CHECK(p % 2 == 1);
}
