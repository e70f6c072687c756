#include "hpzero/poisson.hpp"

#include <map>
#include <tuple>

namespace hpzero {

BracketTable canonical_brackets(const SurfaceSpec& spec) {
  return {partial(spec.Q, Var::z), partial(spec.Q, Var::x), partial(spec.Q, Var::y)};
}

SparsePolynomial bracket_raw(const SparsePolynomial& f, const SparsePolynomial& g,
                             const BracketTable& table) {
  SparsePolynomial fx = partial(f, Var::x), fy = partial(f, Var::y), fz = partial(f, Var::z);
  SparsePolynomial gx = partial(g, Var::x), gy = partial(g, Var::y), gz = partial(g, Var::z);
  return table.xy * (fx * gy - fy * gx) + table.yz * (fy * gz - fz * gy) +
         table.zx * (fz * gx - fx * gz);
}

SparsePolynomial bracket_raw(const SparsePolynomial& f, const SparsePolynomial& g,
                             const SurfaceSpec& spec) {
  return bracket_raw(f, g, canonical_brackets(spec));
}

SparsePolynomial bracket(const SparsePolynomial& f, const SparsePolynomial& g,
                         const SurfaceSpec& spec) {
  return normal_form(bracket_raw(f, g, spec), spec.Q);
}

SparsePolynomial bracket(const SparsePolynomial& f, const SparsePolynomial& g,
                         const SurfaceSpec& spec, const BracketTable& table) {
  return normal_form(bracket_raw(f, g, table), spec.Q);
}

SparseIntMatrix hamiltonian_matrix(const Monomial& f, int w, const SurfaceSpec& spec) {
  const WeightSystem& ws = spec.ws;
  int target_w = w + weight(f, ws) + ws.kappa;
  std::vector<Monomial> target = graded_basis(ws, spec.Q, target_w);
  std::vector<Monomial> source = graded_basis(ws, spec.Q, w);
  std::map<Monomial, int, MonomialLexLess> index;
  for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = static_cast<int>(i);
  SparsePolynomial pf = SparsePolynomial::monomial(1, f);
  std::vector<std::tuple<int, int, Rational>> triples;
  for (std::size_t col = 0; col < source.size(); ++col) {
    SparsePolynomial image = bracket(pf, SparsePolynomial::monomial(1, source[col]), spec);
    for (const auto& [m, c] : image.terms())
      triples.emplace_back(index.at(m), static_cast<int>(col), c);
  }
  return integer_matrix(static_cast<int>(target.size()), static_cast<int>(source.size()),
                        triples);
}

}  // namespace hpzero
