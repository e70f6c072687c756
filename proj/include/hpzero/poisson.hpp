#pragma once

#include "hpzero/exactmat.hpp"
#include "hpzero/poly.hpp"
#include "hpzero/surface.hpp"

namespace hpzero {

// Generator brackets of the Poisson structure on C[x,y,z] attached to Q.
struct BracketTable {
  SparsePolynomial xy;  // {x, y}
  SparsePolynomial yz;  // {y, z}
  SparsePolynomial zx;  // {z, x}
};

// {x,y} = Q_z, {y,z} = Q_x, {z,x} = Q_y.  (Partials of a weight-d equation
// have weight < d, so they already are their own normal forms mod Q.)
BracketTable canonical_brackets(const SurfaceSpec& spec);

// Bracket in C[x,y,z], no reduction:
//   {f,g} = {x,y}(f_x g_y - f_y g_x) + {y,z}(f_y g_z - f_z g_y)
//         + {z,x}(f_z g_x - f_x g_z).
// With the canonical table, {Q, f} = 0 identically.  The table argument
// exists so checks can be run against a deliberately corrupted structure.
SparsePolynomial bracket_raw(const SparsePolynomial& f, const SparsePolynomial& g,
                             const BracketTable& table);
SparsePolynomial bracket_raw(const SparsePolynomial& f, const SparsePolynomial& g,
                             const SurfaceSpec& spec);

// Bracket on C[x,y,z]/(Q): the raw bracket reduced to normal form.
SparsePolynomial bracket(const SparsePolynomial& f, const SparsePolynomial& g,
                         const SurfaceSpec& spec);
SparsePolynomial bracket(const SparsePolynomial& f, const SparsePolynomial& g,
                         const SurfaceSpec& spec, const BracketTable& table);

// Matrix of the Hamiltonian derivation {f, .} from the weight-w slice of
// C[x,y,z]/(Q) to the slice of weight w + |f| + kappa, in the graded_basis
// orderings, with denominators cleared matrix-wide.
SparseIntMatrix hamiltonian_matrix(const Monomial& f, int w, const SurfaceSpec& spec);

}  // namespace hpzero
