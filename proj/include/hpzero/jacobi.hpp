#pragma once

#include <map>
#include <vector>

#include "hpzero/series.hpp"
#include "hpzero/surface.hpp"

namespace hpzero {

// Dimensions of the graded pieces of some graded vector space.  Absent keys
// mean dimension zero.
struct GradedDims {
  std::map<int, int> dims;
  int max_w = 0;  // weights 0..max_w were computed

  int at(int w) const;
  long long total() const;
};

// Top weight of the Jacobian ring of an isolated singularity:
// 3d - 2(a+b+c).
int socle_bound(const WeightSystem& ws);

// Graded dimensions of J = C[x,y,z]/(Q_x, Q_y, Q_z) for weights 0..max_w,
// each weight computed as dim of the ambient slice minus the rank of the
// multiplication map (f,g,h) -> f Q_x + g Q_y + h Q_z into that slice.
GradedDims jacobi_dims(const SurfaceSpec& spec, int max_w, int workers = 0);

// Closed form (1-t^(d-a))(1-t^(d-b))(1-t^(d-c)) / ((1-t^a)(1-t^b)(1-t^c))
// through t^max_w.
Series jacobi_hilbert_closed(const WeightSystem& ws, int max_w);

// Total dimension of J; requires a validated spec (sums dims through the
// socle bound).
long long milnor_number(const SurfaceSpec& spec);

// The weights n_1 <= ... <= n_mu at which J has a basis element, with
// multiplicity.  Requires a validated spec.
std::vector<int> jacobi_exponents(const SurfaceSpec& spec);

struct CoxeterData {
  std::vector<int> exponents;  // m_i
  int coxeter_number = 0;      // h
};

// Kleinian dictionary: for D and E tags m_i = n_i + 1 and h = d; for type A
// m_i = n_i/2 + 1 and h = d/2 (type A weights are doubled).  Throws
// InvalidInput for non-Kleinian tags.
CoxeterData coxeter_data(const SurfaceSpec& spec);

}  // namespace hpzero
