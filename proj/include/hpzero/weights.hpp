#pragma once

#include <string>

#include "hpzero/errors.hpp"

namespace hpzero {

enum class Var { x = 0, y = 1, z = 2 };

inline constexpr Var kVars[3] = {Var::x, Var::y, Var::z};

// Grading of C[x,y,z] by positive integer weights |x| = a <= |y| = b <= |z| = c,
// together with the degree d of the surface equation.  kappa = d - (a+b+c) is
// the weight added by the Poisson bracket.
struct WeightSystem {
  int a = 1;
  int b = 1;
  int c = 1;
  int d = 0;
  int kappa = -3;

  WeightSystem() = default;
  WeightSystem(int a_, int b_, int c_, int d_);

  int var_weight(Var v) const;
};

struct Monomial {
  int i = 0;  // exponent of x
  int j = 0;  // exponent of y
  int k = 0;  // exponent of z

  friend bool operator==(const Monomial&, const Monomial&) = default;

  bool is_one() const { return i == 0 && j == 0 && k == 0; }
  bool divides(const Monomial& m) const;
  Monomial operator*(const Monomial& m) const;
  // Requires divides(m) to hold for the right-hand side: (*this) | m.
  Monomial quotient_of(const Monomial& m) const;
  int exp(Var v) const;
};

int weight(const Monomial& m, const WeightSystem& ws);

// Lexicographic order with z > y > x: compare z-exponents first.
bool lex_less(const Monomial& l, const Monomial& r);

struct MonomialLexLess {
  bool operator()(const Monomial& l, const Monomial& r) const {
    return lex_less(l, r);
  }
};

std::string to_string(const Monomial& m);

}  // namespace hpzero
