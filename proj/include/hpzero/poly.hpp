#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hpzero/rational.hpp"
#include "hpzero/series.hpp"
#include "hpzero/weights.hpp"

namespace hpzero {

// Sparse polynomial in x, y, z over Q.  Terms are kept in lex order
// (z > y > x) with no zero coefficients stored.
class SparsePolynomial {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialLexLess>;

  SparsePolynomial() = default;

  static SparsePolynomial zero() { return {}; }
  static SparsePolynomial constant(const Rational& c);
  static SparsePolynomial monomial(const Rational& c, const Monomial& m);
  static SparsePolynomial variable(Var v);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const Monomial& m) const;

  // Largest monomial in lex order; both require a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coeff() const;

  void add_term(const Rational& c, const Monomial& m);

  SparsePolynomial operator-() const;
  friend SparsePolynomial operator+(const SparsePolynomial&, const SparsePolynomial&);
  friend SparsePolynomial operator-(const SparsePolynomial&, const SparsePolynomial&);
  friend SparsePolynomial operator*(const SparsePolynomial&, const SparsePolynomial&);
  SparsePolynomial& operator+=(const SparsePolynomial& r);
  SparsePolynomial& operator-=(const SparsePolynomial& r);
  SparsePolynomial scaled(const Rational& c) const;

  friend bool operator==(const SparsePolynomial&, const SparsePolynomial&) = default;

  // Weight of a weight-homogeneous polynomial, or nullopt if terms have mixed
  // weights.  The zero polynomial is homogeneous of every weight; it reports
  // weight 0.
  std::optional<int> homogeneous_weight(const WeightSystem& ws) const;

  std::string str() const;

 private:
  TermMap terms_;
};

SparsePolynomial partial(const SparsePolynomial& p, Var v);

// Remainder of p under division by Q alone, taking leading monomials in lex
// order.  For a principal ideal this is a complete normal form: the result
// has no monomial divisible by the leading monomial of Q, and two
// polynomials are congruent mod (Q) iff their normal forms are equal.
// Requires Q != 0.
SparsePolynomial normal_form(const SparsePolynomial& p, const SparsePolynomial& Q);

// All monomials of weight w, in decreasing lex order.
std::vector<Monomial> ambient_basis(const WeightSystem& ws, int w);

// Monomials of weight w not divisible by the leading monomial of Q: a basis
// of the weight-w slice of C[x,y,z]/(Q).  Decreasing lex order.  Requires
// Q != 0.
std::vector<Monomial> graded_basis(const WeightSystem& ws, const SparsePolynomial& Q,
                                   int w);

// Hilbert series (1 - t^d) / ((1 - t^a)(1 - t^b)(1 - t^c)) through t^max_w.
Series hilbert_OX(const WeightSystem& ws, int max_w);

}  // namespace hpzero
