#pragma once

#include <map>
#include <vector>

#include "hpzero/jacobi.hpp"
#include "hpzero/poly.hpp"
#include "hpzero/surface.hpp"

namespace hpzero {

struct Hp0Options {
  long long matrix_cap = 2'000'000;  // max nonzeros per weight slice
  int workers = 0;                   // 0 = hardware concurrency
  // Extra spanning polynomials (in normal form) appended to the monomial
  // generators of every slice; they are linear combinations of monomial
  // generators, so dimensions must not change.  Test hook.
  std::vector<SparsePolynomial> extra_generators;
};

struct HP0Table {
  int n = 1;
  int max_w = 0;
  GradedDims dims;           // graded dimensions of HP_0(Sym^n O)
  std::map<int, int> ranks;  // rank of the Hamiltonian span per weight
};

// Brute-force graded dimensions of the zeroth Poisson homology of Sym^n of
// the coordinate ring: in each weight w, the quotient of the slice of
// Sym^n O by the span of xi_f(e) over all normal-form monomials f with
// 1 <= |f| <= w - kappa and all basis multisets e of weight w - |f| - kappa.
// Sum over components of xi_f applied slot-wise; dims = slice dim - rank.
HP0Table hp0_dims(const SurfaceSpec& spec, int n, int max_w,
                  const Hp0Options& opts = {});

struct ComparisonRow {
  int w = 0;
  long long brute = 0;
  long long closed = 0;
  bool equal = false;
};

struct ComparisonReport {
  int n = 1;
  int max_w = 0;
  std::vector<ComparisonRow> rows;
  bool all_equal = true;
};

// Brute-force dims versus the coefficient of t^w s^n in the closed-form
// product expansion, for w = 0..max_w.
ComparisonReport hp0_compare(const SurfaceSpec& spec, int n, int max_w,
                             const Hp0Options& opts = {});

}  // namespace hpzero
