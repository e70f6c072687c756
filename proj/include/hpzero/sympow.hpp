#pragma once

#include <compare>
#include <map>
#include <vector>

#include "hpzero/poisson.hpp"
#include "hpzero/surface.hpp"

namespace hpzero {

// Basis element of Sym^n of the coordinate ring: a multiset of n normal-form
// monomials, stored sorted ascending in lex order.  Weight-0 factors (the
// monomial 1) pad multisets whose support has fewer than n elements.
struct SymBasisElement {
  std::vector<Monomial> factors;

  explicit SymBasisElement(std::vector<Monomial> f);
  SymBasisElement() = default;

  int weight(const WeightSystem& ws) const;
  friend bool operator==(const SymBasisElement&, const SymBasisElement&) = default;
  friend bool operator<(const SymBasisElement& l, const SymBasisElement& r);
  std::string str() const;
};

// All multisets of n normal-form monomials of total weight w, sorted.
std::vector<SymBasisElement> sym_basis(const SurfaceSpec& spec, int n, int w);

// The derivation xi_f acting slot-wise: each factor v of e is replaced in
// turn by {f, v}, expanded over the multiset basis in weight
// w + |f| + kappa.  A factor of multiplicity r contributes with coefficient
// multiplied by r.
std::map<SymBasisElement, Rational> xi_action(const Monomial& f,
                                              const SymBasisElement& e,
                                              const SurfaceSpec& spec);

// Extension of xi_action linear in f; used to check that redundant
// generators do not enlarge the span.
std::map<SymBasisElement, Rational> xi_action_poly(const SparsePolynomial& f,
                                                   const SymBasisElement& e,
                                                   const SurfaceSpec& spec);

}  // namespace hpzero
