#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hpzero/poisson.hpp"
#include "hpzero/surface.hpp"

namespace hpzero {

enum class BracketAxiom { Antisymmetry, Leibniz, Jacobi, Casimir, WeightShift };

struct VerifyOptions {
  int max_weight = 8;          // window for dimension comparisons
  int max_t = 24;              // t-window for series identities
  int max_s = 4;               // s-window for series identities
  int samples = 100;           // random inputs per axiom per surface
  int max_sample_weight = 10;  // weight bound for random inputs
  std::uint64_t seed = 0x00c0ffee;
  long long matrix_cap = 2'000'000;
  int workers = 0;
  std::vector<SurfaceSpec> surfaces;  // empty = default catalog selection
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string window;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// The cross-checks behind `hpzero verify`:
//   - bracket axioms on random homogeneous inputs,
//   - brute-force HP_0 at n = 1 against the Jacobian ring dimensions,
//   - Sym of the generator character against the product expansion,
//   - chi reassembled from twist characters against its closed form,
//   - the wreath character against the product expansion and its
//     partition-row decomposition,
//   - the type A slice character against the generator character.
VerifyReport run_verify(const VerifyOptions& opts);

// A(m) for m = 2..4, D(m) for m = 2..3, E6, E7, E8, tE6/tE7/tE8 at lambda=1.
std::vector<SurfaceSpec> default_verify_catalog();

// Single axiom over random homogeneous polynomial pairs (triples for the
// Jacobi identity).  Exposed so tests can feed a corrupted bracket table and
// watch the identity fail.
bool check_bracket_axiom(const SurfaceSpec& spec, const BracketTable& table,
                         BracketAxiom axiom, int samples, int max_weight,
                         std::uint64_t seed, std::string* detail = nullptr);

// Random weight-homogeneous polynomial with small rational coefficients;
// zero when the weight-w slice is empty.
SparsePolynomial random_homogeneous(const WeightSystem& ws, int w,
                                    std::mt19937_64& rng);

}  // namespace hpzero
