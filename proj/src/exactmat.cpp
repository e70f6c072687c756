#include "hpzero/exactmat.hpp"

#include <algorithm>
#include <random>

#include "hpzero/errors.hpp"

namespace hpzero {

void SparseIntMatrix::set(int r, int c, const Int& v) {
  if (v == 0)
    entries.erase({r, c});
  else
    entries[{r, c}] = v;
}

Int SparseIntMatrix::at(int r, int c) const {
  auto it = entries.find({r, c});
  return it == entries.end() ? Int(0) : it->second;
}

SparseIntMatrix SparseIntMatrix::transpose() const {
  SparseIntMatrix t;
  t.rows = cols;
  t.cols = rows;
  for (const auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
  return t;
}

SparseIntMatrix integer_matrix(int rows, int cols,
                               const std::vector<std::tuple<int, int, Rational>>& triples) {
  Int lcm = 1;
  for (const auto& [r, c, q] : triples)
    if (q != 0) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  SparseIntMatrix m;
  m.rows = rows;
  m.cols = cols;
  for (const auto& [r, c, q] : triples) {
    if (q == 0) continue;
    Rational scaled = q * Rational(lcm);
    auto [it, inserted] = m.entries.emplace(std::make_pair(r, c), Int(scaled.get_num()));
    if (!inserted) it->second += scaled.get_num();
  }
  for (auto it = m.entries.begin(); it != m.entries.end();)
    it = it->second == 0 ? m.entries.erase(it) : std::next(it);
  return m;
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1;
  for (a %= p; e; e >>= 1, a = mulmod(a, a, p))
    if (e & 1) r = mulmod(r, a, p);
  return r;
}

u64 reduce_mod(const Int& v, u64 p) {
  Int r;
  mpz_mod_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

// Column-major copy with exact duplicate columns collapsed and empty columns
// dropped.  Deduplication only removes repeats of one column vector, so the
// rank is untouched.
std::vector<std::vector<std::pair<int, Int>>> distinct_columns(const SparseIntMatrix& m) {
  std::map<int, std::vector<std::pair<int, Int>>> by_col;
  for (const auto& [rc, v] : m.entries) by_col[rc.second].emplace_back(rc.first, v);
  std::vector<std::vector<std::pair<int, Int>>> cols;
  for (auto& [c, col] : by_col) cols.push_back(std::move(col));
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

int modular_rank_of_columns(const std::vector<std::vector<std::pair<int, Int>>>& cols,
                            int rows, u64 p) {
  // Dense elimination over rows of the transpose: each distinct column
  // becomes a row of length `rows`.
  std::vector<std::vector<u64>> mat;
  mat.reserve(cols.size());
  for (const auto& col : cols) {
    std::vector<u64> row(rows, 0);
    bool nonzero = false;
    for (const auto& [r, v] : col) {
      row[r] = reduce_mod(v, p);
      nonzero = nonzero || row[r] != 0;
    }
    if (nonzero) mat.push_back(std::move(row));
  }
  int rank = 0;
  int n = static_cast<int>(mat.size());
  for (int c = 0; c < rows && rank < n; ++c) {
    int pivot = -1;
    for (int r = rank; r < n; ++r)
      if (mat[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(mat[rank], mat[pivot]);
    u64 inv = powmod(mat[rank][c], p - 2, p);
    for (int r = rank + 1; r < n; ++r) {
      if (mat[r][c] == 0) continue;
      u64 factor = mulmod(mat[r][c], inv, p);
      for (int cc = c; cc < rows; ++cc) {
        u64 sub = mulmod(factor, mat[rank][cc], p);
        mat[r][cc] = (mat[r][cc] + p - sub) % p;
      }
    }
    ++rank;
  }
  return rank;
}

int bareiss_rank_of_columns(const std::vector<std::vector<std::pair<int, Int>>>& cols,
                            int rows) {
  // Dense fraction-free elimination on the transpose (one row per distinct
  // column), with full pivoting on a smallest-magnitude nonzero entry.  Each
  // step divides exactly by the previous pivot, so entries remain minors of
  // the original matrix.
  std::vector<std::vector<Int>> mat;
  mat.reserve(cols.size());
  for (const auto& col : cols) {
    std::vector<Int> row(rows, Int(0));
    for (const auto& [r, v] : col) row[r] = v;
    mat.push_back(std::move(row));
  }
  int n = static_cast<int>(mat.size());
  if (n == 0 || rows == 0) return 0;
  int rank = 0;
  Int prev_pivot = 1;
  std::vector<int> colperm(rows);
  for (int c = 0; c < rows; ++c) colperm[c] = c;
  int R = n, C = rows;
  while (rank < R && rank < C) {
    int pr = -1, pc = -1;
    for (int r = rank; r < R; ++r)
      for (int c = rank; c < C; ++c) {
        const Int& v = mat[r][colperm[c]];
        if (v == 0) continue;
        if (pr < 0 || mpz_cmpabs(v.get_mpz_t(), mat[pr][colperm[pc]].get_mpz_t()) < 0) {
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;
    std::swap(mat[rank], mat[pr]);
    std::swap(colperm[rank], colperm[pc]);
    const Int pivot = mat[rank][colperm[rank]];
    for (int r = rank + 1; r < R; ++r) {
      Int& lead = mat[r][colperm[rank]];
      for (int c = rank + 1; c < C; ++c) {
        Int& entry = mat[r][colperm[c]];
        entry = entry * pivot - lead * mat[rank][colperm[c]];
        mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), prev_pivot.get_mpz_t());
      }
      lead = 0;
    }
    prev_pivot = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

u64 random_rank_prime() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::uniform_int_distribution<u64> dist(u64(1) << 61, (u64(1) << 62) - 1);
  for (;;) {
    Int candidate(0);
    u64 raw = dist(rng) | 1;
    mpz_set_ui(candidate.get_mpz_t(), raw);
    if (mpz_probab_prime_p(candidate.get_mpz_t(), 30) != 0) return raw;
  }
}

int rank_modular(const SparseIntMatrix& m, u64 p) {
  return modular_rank_of_columns(distinct_columns(m), m.rows, p);
}

int rank_bareiss(const SparseIntMatrix& m) {
  return bareiss_rank_of_columns(distinct_columns(m), m.rows);
}

int rank_exact(const SparseIntMatrix& m) { return rank_exact(m, random_rank_prime()); }

int rank_exact(const SparseIntMatrix& m, u64 prime) {
  auto cols = distinct_columns(m);
  int bound = std::min<int>(m.rows, static_cast<int>(cols.size()));
  if (bound == 0) return 0;
  int modular = modular_rank_of_columns(cols, m.rows, prime);
  // A modular rank is a lower bound; meeting min(rows, cols) certifies it.
  if (modular == bound) return modular;
  return bareiss_rank_of_columns(cols, m.rows);
}

}  // namespace hpzero
