#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hpzero/jacobi.hpp"
#include "hpzero/surface.hpp"

using namespace hpzero;

TEST_CASE("catalog weight systems") {
  SurfaceSpec a1 = catalog(CatalogTag::A, 2);
  CHECK(a1.name == "A1");
  CHECK(a1.ws.a == 2);
  CHECK(a1.ws.b == 2);
  CHECK(a1.ws.c == 2);
  CHECK(a1.ws.d == 4);
  CHECK(a1.ws.kappa == -2);

  SurfaceSpec a3 = catalog(CatalogTag::A, 4);
  CHECK(a3.name == "A3");
  CHECK(a3.ws.d == 8);
  CHECK(a3.ws.kappa == -2);

  SurfaceSpec d4 = catalog(CatalogTag::D, 2);
  CHECK(d4.name == "D4");
  CHECK(d4.ws.a == 2);
  CHECK(d4.ws.b == 2);
  CHECK(d4.ws.c == 3);
  CHECK(d4.ws.d == 6);
  CHECK(d4.ws.kappa == -1);

  SurfaceSpec e7 = catalog(CatalogTag::E7);
  CHECK(e7.ws.a == 4);
  CHECK(e7.ws.b == 6);
  CHECK(e7.ws.c == 9);
  CHECK(e7.ws.d == 18);
  CHECK(e7.ws.kappa == -1);

  SurfaceSpec e8 = catalog(CatalogTag::E8);
  CHECK(e8.ws.a == 6);
  CHECK(e8.ws.b == 10);
  CHECK(e8.ws.c == 15);
  CHECK(e8.ws.d == 30);

  SurfaceSpec te6 = catalog(CatalogTag::tE6);
  CHECK(te6.ws.a == 1);
  CHECK(te6.ws.d == 3);
  CHECK(te6.ws.kappa == 0);
  SurfaceSpec te7 = catalog(CatalogTag::tE7);
  CHECK(te7.ws.c == 2);
  CHECK(te7.ws.d == 4);
  CHECK(te7.ws.kappa == 0);
  SurfaceSpec te8 = catalog(CatalogTag::tE8);
  CHECK(te8.ws.b == 2);
  CHECK(te8.ws.c == 3);
  CHECK(te8.ws.d == 6);
  CHECK(te8.ws.kappa == 0);

  CHECK_THROWS_AS(catalog(CatalogTag::A, 1), InvalidInput);
  CHECK_THROWS_AS(catalog(CatalogTag::D, 1), InvalidInput);
}

TEST_CASE("catalog equations are homogeneous of the stated degree") {
  for (CatalogTag tag : catalog_tags()) {
    for (int m : {2, 3, 5}) {
      SurfaceSpec spec = catalog(tag, m);
      CAPTURE(spec.name);
      CHECK(spec.Q.homogeneous_weight(spec.ws) == spec.ws.d);
    }
  }
}

TEST_CASE("tag parsing and naming") {
  CHECK(parse_tag("A") == CatalogTag::A);
  CHECK(parse_tag("tE7") == CatalogTag::tE7);
  CHECK(parse_tag("E8") == CatalogTag::E8);
  CHECK(tag_name(CatalogTag::D) == "D");
  CHECK(tag_name(CatalogTag::tE6) == "tE6");
  CHECK_THROWS_AS(parse_tag("F4"), InvalidInput);
  CHECK(is_kleinian(CatalogTag::A));
  CHECK(is_kleinian(CatalogTag::E8));
  CHECK_FALSE(is_kleinian(CatalogTag::tE6));
  CHECK(is_elliptic(CatalogTag::tE8));
  CHECK_FALSE(is_elliptic(CatalogTag::D));
}

TEST_CASE("validation accepts the whole default catalog") {
  for (CatalogTag tag : catalog_tags()) {
    for (int m : {2, 3, 4}) {
      SurfaceSpec spec = catalog(tag, m);
      ValidationReport report = validate(spec);
      CAPTURE(spec.name);
      for (const auto& check : report.checks) {
        CAPTURE(check.name);
        CAPTURE(check.detail);
        CHECK(check.passed);
      }
      CHECK(report.valid());
    }
  }
}

TEST_CASE("a degenerate modulus fails the isolation check") {
  // x^3 + y^3 + z^3 - 3xyz factors, so the singular locus is positive
  // dimensional and the Jacobian ring stays nonzero in high weights.
  SurfaceSpec bad = catalog(CatalogTag::tE6, 0, Rational(-3));
  ValidationReport report = validate(bad);
  CHECK_FALSE(report.valid());
  bool isolation_failed = false;
  for (const auto& check : report.checks)
    if (check.name == "isolated singularity" && !check.passed) isolation_failed = true;
  CHECK(isolation_failed);
}

TEST_CASE("a non-isolated custom surface is rejected") {
  SparsePolynomial q =
      SparsePolynomial::variable(Var::x) * SparsePolynomial::variable(Var::x) *
      SparsePolynomial::variable(Var::y);
  SurfaceSpec spec = custom_surface(1, 1, 1, q);
  ValidationReport report = validate(spec);
  CHECK_FALSE(report.valid());
}

TEST_CASE("custom surfaces infer the degree and reject inhomogeneous input") {
  SparsePolynomial x = SparsePolynomial::variable(Var::x);
  SparsePolynomial y = SparsePolynomial::variable(Var::y);
  SparsePolynomial z = SparsePolynomial::variable(Var::z);
  SurfaceSpec spec = custom_surface(2, 2, 2, x * x + y * y + z * z);
  CHECK(spec.ws.d == 4);
  CHECK(spec.ws.kappa == -2);
  CHECK(validate(spec).valid());
  CHECK_THROWS_AS(custom_surface(1, 1, 1, x + y * y), InvalidInput);
  CHECK_THROWS_AS(custom_surface(1, 1, 1, SparsePolynomial{}), InvalidInput);
}

TEST_CASE("surfaces load from JSON") {
  std::string text = R"({
    "a": 2, "b": 2, "c": 2,
    "terms": [
      {"coef": 1, "exp": [2, 0, 0]},
      {"coef": "1", "exp": [0, 2, 0]},
      {"coef": "1/1", "exp": [0, 0, 2]}
    ]
  })";
  SurfaceSpec spec = surface_from_json(text);
  CHECK(spec.ws.d == 4);
  CHECK(spec.Q.str() == "z^2 + y^2 + x^2");
  CHECK(validate(spec).valid());

  CHECK_THROWS_AS(surface_from_json("not json"), InvalidInput);
  CHECK_THROWS_AS(surface_from_json(R"({"a": 1, "b": 1, "c": 1})"), InvalidInput);
  CHECK_THROWS_AS(surface_from_json(R"({
    "a": 1, "b": 1, "c": 1,
    "terms": [{"coef": 1, "exp": [1, 0]}]
  })"), InvalidInput);
  CHECK_THROWS_AS(surface_from_json(R"({
    "a": 1, "b": 1, "c": 1,
    "terms": [{"coef": 1.5, "exp": [1, 0, 0]}]
  })"), InvalidInput);
  CHECK_THROWS_AS(surface_from_json(R"({
    "a": 1, "b": 1, "c": 1,
    "terms": [{"coef": 1, "exp": [1, 0, -1]}]
  })"), InvalidInput);
}

TEST_CASE("elliptic moduli other than the default work") {
  SurfaceSpec spec = catalog(CatalogTag::tE7, 0, Rational(2, 3));
  CHECK(spec.Q.coeff(Monomial{1, 1, 1}) == Rational(2, 3));
  CHECK(validate(spec).valid());
}

TEST_CASE("bracket degree equals the weight shift kappa") {
  CHECK(bracket_degree(catalog(CatalogTag::A, 5)) == -2);
  CHECK(bracket_degree(catalog(CatalogTag::E6)) == -1);
  CHECK(bracket_degree(catalog(CatalogTag::tE8)) == 0);
}
