#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpzero/formulas.hpp"
#include "hpzero/hp0.hpp"

using namespace hpzero;

TEST_CASE("the n=1 table reproduces the jacobian ring") {
  SurfaceSpec e6 = catalog(CatalogTag::E6);
  HP0Table table = hp0_dims(e6, 1, 10);
  GradedDims jac = jacobi_dims(e6, 10);
  for (int w = 0; w <= 10; ++w) {
    CAPTURE(w);
    CHECK(table.dims.at(w) == jac.at(w));
  }
}

TEST_CASE("weight zero is always one-dimensional") {
  for (CatalogTag tag : catalog_tags()) {
    SurfaceSpec spec = catalog(tag, 2);
    for (int n = 1; n <= 2; ++n) {
      HP0Table table = hp0_dims(spec, n, 0);
      CAPTURE(spec.name);
      CHECK(table.dims.at(0) == 1);
    }
  }
}

TEST_CASE("second symmetric power of the quadric") {
  SurfaceSpec a1 = catalog(CatalogTag::A, 2);
  HP0Table table = hp0_dims(a1, 2, 8);
  std::map<int, int> expected = {{0, 1}, {4, 1}};
  for (int w = 0; w <= 8; ++w) {
    CAPTURE(w);
    CHECK(table.dims.at(w) == (expected.count(w) ? expected[w] : 0));
  }
  long long total = 0;
  for (int w = 0; w <= 8; ++w) total += table.dims.at(w);
  CHECK(total == 2);
}

TEST_CASE("brute force matches the closed form on small cases") {
  struct Case {
    CatalogTag tag;
    int m, n, max_w;
  };
  for (const Case& c : {Case{CatalogTag::A, 2, 2, 10}, Case{CatalogTag::A, 3, 2, 8},
                        Case{CatalogTag::D, 2, 2, 8}, Case{CatalogTag::tE6, 0, 2, 6}}) {
    SurfaceSpec spec = catalog(c.tag, c.m);
    ComparisonReport report = hp0_compare(spec, c.n, c.max_w);
    CAPTURE(spec.name);
    CAPTURE(c.n);
    for (const ComparisonRow& row : report.rows) {
      CAPTURE(row.w);
      CHECK(row.brute == row.closed);
    }
    CHECK(report.all_equal);
  }
}

TEST_CASE("third symmetric power of the quadric matches the closed form") {
  SurfaceSpec a1 = catalog(CatalogTag::A, 2);
  ComparisonReport report = hp0_compare(a1, 3, 12);
  CHECK(report.all_equal);
  Series closed = hp0_product_formula(a1, 12, 3).s_row(3);
  for (const ComparisonRow& row : report.rows) {
    CAPTURE(row.w);
    CHECK(Int(static_cast<long>(row.brute)) == closed.coeff(row.w));
  }
}

TEST_CASE("redundant polynomial generators never change the dimensions") {
  SurfaceSpec a2 = catalog(CatalogTag::A, 3);
  Hp0Options plain;
  Hp0Options padded;
  SparsePolynomial x = SparsePolynomial::variable(Var::x);
  SparsePolynomial y = SparsePolynomial::variable(Var::y);
  SparsePolynomial z = SparsePolynomial::variable(Var::z);
  padded.extra_generators = {y + z.scaled(Rational(3)), z * z - y * y,
                             x * x * x + y * z.scaled(Rational(1, 2))};
  for (int n = 1; n <= 2; ++n) {
    HP0Table a = hp0_dims(a2, n, 8, plain);
    HP0Table b = hp0_dims(a2, n, 8, padded);
    for (int w = 0; w <= 8; ++w) {
      CAPTURE(n);
      CAPTURE(w);
      CHECK(a.dims.at(w) == b.dims.at(w));
      CHECK(a.ranks.at(w) == b.ranks.at(w));
    }
  }
}

TEST_CASE("inhomogeneous extra generators are rejected") {
  SurfaceSpec a1 = catalog(CatalogTag::A, 2);
  Hp0Options opts;
  opts.extra_generators = {SparsePolynomial::variable(Var::x) +
                           SparsePolynomial::constant(Rational(1))};
  CHECK_THROWS_AS(hp0_dims(a1, 1, 4, opts), InvalidInput);
}

TEST_CASE("the matrix cap aborts oversized slices") {
  SurfaceSpec a1 = catalog(CatalogTag::A, 2);
  Hp0Options opts;
  opts.matrix_cap = 3;
  bool threw = false;
  try {
    hp0_dims(a1, 2, 8, opts);
  } catch (const CapExceeded& e) {
    threw = true;
    CHECK(e.cap == 3);
    CHECK(e.nonzeros > 3);
  }
  CHECK(threw);
}

TEST_CASE("ranks plus dims add up to the slice size") {
  SurfaceSpec d4 = catalog(CatalogTag::D, 2);
  HP0Table table = hp0_dims(d4, 2, 6);
  Series h = hilbert_OX(d4.ws, 6);
  for (int w = 0; w <= 6; ++w) {
    Series slice = sym_power(h, 2, 6);
    CHECK(Int(static_cast<long>(table.dims.at(w) + table.ranks.at(w))) == slice.coeff(w));
  }
}
