#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "hpzero/jacobi.hpp"

using namespace hpzero;

TEST_CASE("socle bounds") {
  CHECK(socle_bound(catalog(CatalogTag::A, 3).ws) == 2);
  CHECK(socle_bound(catalog(CatalogTag::A, 4).ws) == 4);
  CHECK(socle_bound(catalog(CatalogTag::D, 2).ws) == 4);
  CHECK(socle_bound(catalog(CatalogTag::E6).ws) == 10);
  CHECK(socle_bound(catalog(CatalogTag::E7).ws) == 16);
  CHECK(socle_bound(catalog(CatalogTag::E8).ws) == 28);
  CHECK(socle_bound(catalog(CatalogTag::tE6).ws) == 3);
  CHECK(socle_bound(catalog(CatalogTag::tE7).ws) == 4);
  CHECK(socle_bound(catalog(CatalogTag::tE8).ws) == 6);
}

TEST_CASE("type A Jacobian rings are truncated polynomial rings in x") {
  for (int m = 2; m <= 6; ++m) {
    SurfaceSpec spec = catalog(CatalogTag::A, m);
    GradedDims dims = jacobi_dims(spec, socle_bound(spec.ws));
    CAPTURE(m);
    CHECK(milnor_number(spec) == m - 1);
    for (int i = 0; i + 1 < m; ++i) CHECK(dims.at(2 * i) == 1);
    for (int w = 0; w <= dims.max_w; ++w)
      if (w % 2 == 1) CHECK(dims.at(w) == 0);
    std::vector<int> exps = jacobi_exponents(spec);
    REQUIRE(static_cast<int>(exps.size()) == m - 1);
    for (int i = 0; i + 1 < m; ++i) CHECK(exps[i] == 2 * i);
  }
}

TEST_CASE("E6 staircase") {
  SurfaceSpec spec = catalog(CatalogTag::E6);
  GradedDims dims = jacobi_dims(spec, 10);
  std::map<int, int> expected = {{0, 1}, {3, 1}, {4, 1}, {6, 1}, {7, 1}, {10, 1}};
  for (int w = 0; w <= 10; ++w)
    CHECK(dims.at(w) == (expected.count(w) ? expected[w] : 0));
  CHECK(milnor_number(spec) == 6);
  CHECK(jacobi_exponents(spec) == std::vector<int>{0, 3, 4, 6, 7, 10});
}

TEST_CASE("D4 staircase") {
  SurfaceSpec spec = catalog(CatalogTag::D, 2);
  GradedDims dims = jacobi_dims(spec, 4);
  CHECK(dims.at(0) == 1);
  CHECK(dims.at(1) == 0);
  CHECK(dims.at(2) == 2);
  CHECK(dims.at(3) == 0);
  CHECK(dims.at(4) == 1);
  CHECK(milnor_number(spec) == 4);
}

TEST_CASE("elliptic Jacobian rings at the default modulus") {
  SurfaceSpec te6 = catalog(CatalogTag::tE6);
  GradedDims dims = jacobi_dims(te6, 3);
  CHECK(dims.at(0) == 1);
  CHECK(dims.at(1) == 3);
  CHECK(dims.at(2) == 3);
  CHECK(dims.at(3) == 1);
  CHECK(milnor_number(te6) == 8);

  CHECK(milnor_number(catalog(CatalogTag::tE7)) == 9);
  CHECK(milnor_number(catalog(CatalogTag::tE8)) == 10);
}

TEST_CASE("brute-force dimensions match the closed-form Hilbert series") {
  for (CatalogTag tag : catalog_tags()) {
    SurfaceSpec spec = catalog(tag, 3);
    int top = socle_bound(spec.ws) + 2;
    GradedDims dims = jacobi_dims(spec, top);
    Series closed = jacobi_hilbert_closed(spec.ws, top);
    for (int w = 0; w <= top; ++w) {
      CAPTURE(spec.name);
      CAPTURE(w);
      CHECK(Int(static_cast<long>(dims.at(w))) == closed.coeff(w));
    }
  }
}

TEST_CASE("milnor number equals the weight formula") {
  for (CatalogTag tag : catalog_tags()) {
    for (int m : {2, 4}) {
      SurfaceSpec spec = catalog(tag, m);
      const WeightSystem& ws = spec.ws;
      long expected = static_cast<long>(ws.d - ws.a) * (ws.d - ws.b) * (ws.d - ws.c) /
                      (static_cast<long>(ws.a) * ws.b * ws.c);
      CAPTURE(spec.name);
      CHECK(milnor_number(spec) == expected);
    }
  }
}

TEST_CASE("graded dimensions are palindromic about the socle") {
  for (CatalogTag tag : {CatalogTag::A, CatalogTag::D, CatalogTag::E6, CatalogTag::E7,
                         CatalogTag::tE6, CatalogTag::tE7, CatalogTag::tE8}) {
    SurfaceSpec spec = catalog(tag, 3);
    int socle = socle_bound(spec.ws);
    GradedDims dims = jacobi_dims(spec, socle);
    for (int w = 0; w <= socle; ++w) {
      CAPTURE(spec.name);
      CAPTURE(w);
      CHECK(dims.at(w) == dims.at(socle - w));
    }
  }
}

TEST_CASE("coxeter exponents and numbers") {
  for (int m = 2; m <= 6; ++m) {
    SurfaceSpec spec = catalog(CatalogTag::A, m);
    CoxeterData cox = coxeter_data(spec);
    CAPTURE(m);
    REQUIRE(static_cast<int>(cox.exponents.size()) == m - 1);
    for (int i = 0; i + 1 < m; ++i) CHECK(cox.exponents[i] == i + 1);
    CHECK(cox.coxeter_number == m);
  }

  CoxeterData d4 = coxeter_data(catalog(CatalogTag::D, 2));
  CHECK(d4.exponents == std::vector<int>{1, 3, 3, 5});
  CHECK(d4.coxeter_number == 6);

  CoxeterData e6 = coxeter_data(catalog(CatalogTag::E6));
  CHECK(e6.exponents == std::vector<int>{1, 4, 5, 7, 8, 11});
  CHECK(e6.coxeter_number == 12);

  CoxeterData e7 = coxeter_data(catalog(CatalogTag::E7));
  CHECK(e7.exponents == std::vector<int>{1, 5, 7, 9, 11, 13, 17});
  CHECK(e7.coxeter_number == 18);

  CoxeterData e8 = coxeter_data(catalog(CatalogTag::E8));
  CHECK(e8.exponents == std::vector<int>{1, 7, 11, 13, 17, 19, 23, 29});
  CHECK(e8.coxeter_number == 30);

  CHECK_THROWS_AS(coxeter_data(catalog(CatalogTag::tE6)), InvalidInput);
}

TEST_CASE("exponent sums reproduce the milnor number") {
  for (CatalogTag tag : catalog_tags()) {
    SurfaceSpec spec = catalog(tag, 5);
    CHECK(static_cast<long>(jacobi_exponents(spec).size()) == milnor_number(spec));
  }
}

TEST_CASE("dimensions vanish strictly above the socle") {
  for (CatalogTag tag : catalog_tags()) {
    SurfaceSpec spec = catalog(tag, 3);
    int socle = socle_bound(spec.ws);
    GradedDims dims = jacobi_dims(spec, socle + 6);
    for (int w = socle + 1; w <= socle + 6; ++w) {
      CAPTURE(spec.name);
      CHECK(dims.at(w) == 0);
    }
  }
}
