#pragma once

#include <string>
#include <vector>

#include "hpzero/poly.hpp"
#include "hpzero/rational.hpp"
#include "hpzero/weights.hpp"

namespace hpzero {

enum class CatalogTag { A, D, E6, E7, E8, tE6, tE7, tE8, Custom };

// A weighted-homogeneous surface {Q = 0} in C^3.  Catalog instances remember
// which family they came from and the parameter that produced them; custom
// surfaces carry tag Custom.
struct SurfaceSpec {
  WeightSystem ws;
  SparsePolynomial Q;
  CatalogTag tag = CatalogTag::Custom;
  int m = 0;               // family parameter for A and D
  Rational lambda = 0;     // modulus for tE6, tE7, tE8
  std::string name;        // display name, e.g. "A2", "D4", "tE6"
};

// Families:
//   A   (m >= 2):  a,b,c = 2,m,m       d = 2m      Q = x^m + y^2 + z^2
//   D   (m >= 2):  a,b,c = 2,m,m+1     d = 2m+2    Q = x^(m+1) + x y^2 + z^2
//   E6:            a,b,c = 3,4,6       d = 12      Q = x^4 + y^3 + z^2
//   E7:            a,b,c = 4,6,9       d = 18      Q = x^3 y + y^3 + z^2
//   E8:            a,b,c = 6,10,15     d = 30      Q = x^5 + y^3 + z^2
//   tE6:           a,b,c = 1,1,1       d = 3       Q = x^3 + y^3 + z^3 + lambda x y z
//   tE7:           a,b,c = 1,1,2       d = 4       Q = x^4 + y^4 + z^2 + lambda x y z
//   tE8:           a,b,c = 1,2,3       d = 6       Q = x^6 + y^3 + z^2 + lambda x y z
// The A instance with parameter m is the singularity A_(m-1); the D instance
// is D_(m+2).  Throws InvalidInput for m < 2 on the parametric families.
SurfaceSpec catalog(CatalogTag tag, int m = 0, const Rational& lambda = 1);

CatalogTag parse_tag(const std::string& tag);
std::string tag_name(CatalogTag tag);
std::vector<CatalogTag> catalog_tags();

bool is_kleinian(CatalogTag tag);
bool is_elliptic(CatalogTag tag);

// Builds a custom surface from weights and an equation.  The degree d is
// inferred from the first term; throws InvalidInput when Q is zero, not
// weight-homogeneous, or the weights are not 1 <= a <= b <= c.
SurfaceSpec custom_surface(int a, int b, int c, const SparsePolynomial& Q);

// Custom surface from its JSON description:
//   {"a": 1, "b": 1, "c": 1,
//    "terms": [{"coef": "1", "exp": [3,0,0]}, ...]}
// Coefficients are strings "p" or "p/q" (plain JSON integers also accepted).
SurfaceSpec surface_from_json(const std::string& text);

struct ValidationCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool valid() const;
};

// Checks that Q is nonzero and weight-homogeneous of weight d, that the
// weights are ordered, and that the singularity is isolated: the Jacobian
// ring must vanish in every weight w with B < w <= B + lcm(a,b,c), where
// B = 3d - 2(a+b+c) is the socle bound.  Since J is generated in weight 0
// over C[x,y,z], vanishing on a window of length >= c forces vanishing in
// every higher weight, so the margin is sufficient.
ValidationReport validate(const SurfaceSpec& spec);

// kappa: the weight of {.,.}, i.e. d - (a+b+c).
int bracket_degree(const SurfaceSpec& spec);

}  // namespace hpzero
