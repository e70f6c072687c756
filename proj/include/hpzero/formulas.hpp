#pragma once

#include <vector>

#include "hpzero/series.hpp"
#include "hpzero/surface.hpp"

namespace hpzero {

/*
 * Closed-form characters.  All of them are bigraded in (t, s): t records the
 * weight grading and s the symmetric-power grading, with the convention that
 * weights appear with positive exponents.
 */

// Character of the generator space of HP_0 over all symmetric powers:
//   sum_{j>=0} h(J;t) t^(jd) s^(j+1),
// where h(J;t) is the closed-form Hilbert series of the Jacobian ring.
// Requires a validated spec.
BiSeries generator_character(const SurfaceSpec& spec, int max_t, int max_s);

// Product expansion of the full bigraded character of HP_0(Sym^n O), all n
// at once: with h(J;t) = sum_i t^(n_i),
//   prod_{i} prod_{j>=0} 1 / (1 - t^(n_i + jd) s^(j+1)).
// Computed directly as a double product, independent of sym_of_bigraded.
BiSeries hp0_product_formula(const SurfaceSpec& spec, int max_t, int max_s);

// Euler characteristic character of the total space of functions on the
// resolution side, defined for every family except type A:
//   (1-t^(d-a))(1-t^(d-b))(1-t^(d-c)) /
//   ((1-t^a)(1-t^b)(1-t^c)(1-t^(d-a) s)).
// Throws InvalidInput for type A tags.
BiSeries chi_Ytilde(const SurfaceSpec& spec, int max_t, int max_s);

// Hilbert series of the q-th twisted piece:
//   t^(q(d-a)) (1-t^(d-c)) / ((1-t^a)(1-t^b)(1-t^c)),  q >= 0.
Series vq_series(const SurfaceSpec& spec, int q, int max_t);

// Character of the space of sections of O(p) twisted to start in weight w0,
// on a weighted projective line with weights a <= b:
//   t^w0 (1 + t^(a-b) + ... + t^(p(a-b))) for p >= 0, zero for p < 0.
// Exponents descend when a < b; the result is a Laurent polynomial.
Series sections_character(int p, int w0, const WeightSystem& ws);

// Reassembles the bigraded Euler characteristic from the twisted pieces:
// with u = t^(a-b) and V_q = vqs[q],
//   E_q = (V_q - V_(q+1)) - u (V_(q+1) - V_(q+2)),
//   chi = sum_{q=0..max_q} s^q E_q, truncated at t^max_t.
// Requires vqs[0..max_q+2].  Each E_q must come out with nonnegative
// coefficients supported in nonnegative t-exponents; otherwise the inputs
// were not twist characters and InvalidInput is thrown.
BiSeries chi_from_twists(const std::vector<Series>& vqs, const WeightSystem& ws,
                         int max_t, int max_q);

// Character of Sym of H[j] spread over symmetric powers with a degree shift
// d per step:
//   Sym( sum_{j>=0} H t^(jd) s^(j+1) ),
// where H is a finite character with nonnegative coefficients.  The s^n row
// equals the direct sum over partitions nu of n of
// tensor_i Sym^(nu_i)(t^((i-1)d) H); wreath_partition_row computes that row
// independently.
BiSeries wreath_hh0_character(const Series& H, int d, int max_t, int max_s);
Series wreath_partition_row(const Series& H, int d, int n, int max_t);

// Character read off the transverse slice model of the type A singularity
// with parameter m (the surface x^m + y^2 + z^2):
//   sum_{k>=0} sum_{j=0..m-2} s^(k+1) t^(2(mk+j)).
BiSeries typeA_slice_character(int m, int max_t, int max_s);

std::vector<std::vector<int>> partitions_of(int n);

}  // namespace hpzero
