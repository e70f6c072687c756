#include "hpzero/jacobi.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "hpzero/exactmat.hpp"
#include "hpzero/parallel.hpp"
#include "hpzero/poly.hpp"

namespace hpzero {

int GradedDims::at(int w) const {
  auto it = dims.find(w);
  return it == dims.end() ? 0 : it->second;
}

long long GradedDims::total() const {
  long long sum = 0;
  for (const auto& [w, dim] : dims) sum += dim;
  return sum;
}

int socle_bound(const WeightSystem& ws) {
  return 3 * ws.d - 2 * (ws.a + ws.b + ws.c);
}

GradedDims jacobi_dims(const SurfaceSpec& spec, int max_w, int workers) {
  const WeightSystem& ws = spec.ws;
  const SparsePolynomial partials[3] = {partial(spec.Q, Var::x), partial(spec.Q, Var::y),
                                        partial(spec.Q, Var::z)};
  std::vector<int> result(static_cast<std::size_t>(std::max(max_w, -1)) + 1, 0);

  auto slice = [&](int w) {
    std::vector<Monomial> target = ambient_basis(ws, w);
    if (target.empty()) return;
    std::map<Monomial, int, MonomialLexLess> index;
    for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
    std::vector<std::tuple<int, int, Rational>> triples;
    int col = 0;
    for (Var v : kVars) {
      if (partials[static_cast<int>(v)].is_zero()) continue;
      int shift = ws.d - ws.var_weight(v);
      for (const Monomial& f : ambient_basis(ws, w - shift)) {
        SparsePolynomial image =
            SparsePolynomial::monomial(1, f) * partials[static_cast<int>(v)];
        for (const auto& [m, c] : image.terms()) triples.emplace_back(index.at(m), col, c);
        ++col;
      }
    }
    int rank = rank_exact(integer_matrix(static_cast<int>(target.size()), col, triples));
    result[w] = static_cast<int>(target.size()) - rank;
  };

  std::vector<int> weights;
  for (int w = max_w; w >= 0; --w) weights.push_back(w);  // heaviest first
  parallel_for_items(weights, workers, slice);

  GradedDims out;
  out.max_w = std::max(max_w, 0);
  for (int w = 0; w <= max_w; ++w)
    if (result[w] != 0) out.dims[w] = result[w];
  return out;
}

Series jacobi_hilbert_closed(const WeightSystem& ws, int max_w) {
  Series numerator = (Series::term(1, 0) - Series::term(1, ws.d - ws.a)) *
                     (Series::term(1, 0) - Series::term(1, ws.d - ws.b)) *
                     (Series::term(1, 0) - Series::term(1, ws.d - ws.c));
  return numerator * Series::geometric(ws.a, max_w) * Series::geometric(ws.b, max_w) *
         Series::geometric(ws.c, max_w);
}

long long milnor_number(const SurfaceSpec& spec) {
  return jacobi_dims(spec, socle_bound(spec.ws)).total();
}

std::vector<int> jacobi_exponents(const SurfaceSpec& spec) {
  GradedDims dims = jacobi_dims(spec, socle_bound(spec.ws));
  std::vector<int> out;
  for (const auto& [w, dim] : dims.dims)
    for (int i = 0; i < dim; ++i) out.push_back(w);
  return out;
}

CoxeterData coxeter_data(const SurfaceSpec& spec) {
  if (!is_kleinian(spec.tag))
    throw InvalidInput("Coxeter exponents are defined for the A, D, E families only");
  CoxeterData data;
  std::vector<int> n = jacobi_exponents(spec);
  if (spec.tag == CatalogTag::A) {
    // Type A weights are doubled relative to the reflection grading.
    for (int ni : n) data.exponents.push_back(ni / 2 + 1);
    data.coxeter_number = spec.ws.d / 2;
  } else {
    for (int ni : n) data.exponents.push_back(ni + 1);
    data.coxeter_number = spec.ws.d;
  }
  return data;
}

}  // namespace hpzero
