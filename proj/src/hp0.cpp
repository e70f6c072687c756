#include "hpzero/hp0.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "hpzero/errors.hpp"
#include "hpzero/exactmat.hpp"
#include "hpzero/formulas.hpp"
#include "hpzero/parallel.hpp"
#include "hpzero/sympow.hpp"

namespace hpzero {

namespace {

struct SliceCaches {
  // Multiset bases per weight, with index maps for the target weights.
  std::map<int, std::vector<SymBasisElement>> bases;
  std::map<int, std::map<SymBasisElement, int>> index;
  // Normal-form monomial generators per weight.
  std::map<int, std::vector<Monomial>> generators;
};

}  // namespace

HP0Table hp0_dims(const SurfaceSpec& spec, int n, int max_w, const Hp0Options& opts) {
  const WeightSystem& ws = spec.ws;
  const int kappa = ws.kappa;
  if (n < 0) throw InvalidInput("symmetric power must be >= 0");
  if (max_w < 0) throw InvalidInput("max weight must be >= 0");

  std::vector<SparsePolynomial> extras;
  for (const SparsePolynomial& g : opts.extra_generators) {
    SparsePolynomial nf = normal_form(g, spec.Q);
    if (nf.is_zero()) continue;
    if (!nf.homogeneous_weight(ws))
      throw InvalidInput("extra generators must be weight-homogeneous");
    extras.push_back(std::move(nf));
  }

  // Weight ranges: generators f run over 1 <= |f| <= w - kappa and act on
  // multisets of weight w - |f| - kappa >= 0.
  int max_fw = std::max(max_w - kappa, 0);
  int max_source = std::max({max_w, max_w - kappa - 1, 0});
  SliceCaches caches;
  for (int w = 0; w <= max_source; ++w) caches.bases[w] = sym_basis(spec, n, w);
  for (int w = 0; w <= max_w; ++w) {
    auto& idx = caches.index[w];
    const auto& basis = caches.bases[w];
    for (std::size_t i = 0; i < basis.size(); ++i) idx[basis[i]] = static_cast<int>(i);
  }
  for (int w = 1; w <= max_fw; ++w) caches.generators[w] = graded_basis(ws, spec.Q, w);

  std::vector<int> dims_by_w(static_cast<std::size_t>(max_w) + 1, 0);
  std::vector<int> rank_by_w(static_cast<std::size_t>(max_w) + 1, 0);

  auto slice = [&](int w) {
    const auto& target = caches.bases.at(w);
    if (target.empty()) return;
    const auto& index = caches.index.at(w);
    std::vector<std::tuple<int, int, Rational>> triples;
    long long nnz = 0;
    int col = 0;
    auto add_column = [&](const std::map<SymBasisElement, Rational>& image) {
      for (const auto& [elem, coef] : image) {
        triples.emplace_back(index.at(elem), col, coef);
        ++nnz;
      }
      ++col;
      if (nnz > opts.matrix_cap) throw CapExceeded(w, nnz, opts.matrix_cap);
    };
    for (int fw = 1; fw <= w - kappa; ++fw) {
      int sw = w - fw - kappa;
      auto gen_it = caches.generators.find(fw);
      if (gen_it == caches.generators.end() || sw < 0) continue;
      const auto& sources = caches.bases.at(sw);
      for (const Monomial& f : gen_it->second)
        for (const SymBasisElement& e : sources) add_column(xi_action(f, e, spec));
    }
    for (const SparsePolynomial& g : extras) {
      int gw = *g.homogeneous_weight(ws);
      int sw = w - gw - kappa;
      if (gw < 1 || sw < 0 || sw > max_source) continue;
      for (const SymBasisElement& e : caches.bases.at(sw))
        add_column(xi_action_poly(g, e, spec));
    }
    int rank = rank_exact(integer_matrix(static_cast<int>(target.size()), col, triples));
    dims_by_w[w] = static_cast<int>(target.size()) - rank;
    rank_by_w[w] = rank;
  };

  std::vector<int> weights;
  for (int w = max_w; w >= 0; --w) weights.push_back(w);
  parallel_for_items(weights, opts.workers, slice);

  HP0Table table;
  table.n = n;
  table.max_w = max_w;
  table.dims.max_w = max_w;
  for (int w = 0; w <= max_w; ++w) {
    table.ranks[w] = rank_by_w[w];
    if (dims_by_w[w] != 0) table.dims.dims[w] = dims_by_w[w];
  }
  return table;
}

ComparisonReport hp0_compare(const SurfaceSpec& spec, int n, int max_w,
                             const Hp0Options& opts) {
  HP0Table brute = hp0_dims(spec, n, max_w, opts);
  Series closed = hp0_product_formula(spec, max_w, n).s_row(n);
  ComparisonReport report;
  report.n = n;
  report.max_w = max_w;
  for (int w = 0; w <= max_w; ++w) {
    ComparisonRow row;
    row.w = w;
    row.brute = brute.dims.at(w);
    Int coef = closed.coeff(w);
    row.closed = coef.fits_slong_p() ? coef.get_si() : -1;
    row.equal = Int(static_cast<long>(row.brute)) == coef;
    report.all_equal = report.all_equal && row.equal;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace hpzero
