#include "hpzero/formulas.hpp"

#include <algorithm>

#include "hpzero/jacobi.hpp"

namespace hpzero {

namespace {

// Stored terms of f reassembled as an exact Laurent polynomial.
Series as_exact(const Series& f) {
  Series out;
  for (const auto& [e, c] : f.terms()) out += Series::term(c, e);
  return out;
}

long small_count(const Int& v, const char* what) {
  if (v < 0 || !v.fits_sint_p()) throw InvalidInput(std::string(what) + " out of range");
  return v.get_si();
}

}  // namespace

BiSeries generator_character(const SurfaceSpec& spec, int max_t, int max_s) {
  const WeightSystem& ws = spec.ws;
  Series hJ = jacobi_hilbert_closed(ws, max_t);
  BiSeries out;
  for (int j = 0; j + 1 <= max_s && j * ws.d <= max_t; ++j)
    out += BiSeries::from_series(hJ.shifted(j * ws.d), j + 1);
  out.truncate(max_t, max_s);
  return out;
}

BiSeries hp0_product_formula(const SurfaceSpec& spec, int max_t, int max_s) {
  const WeightSystem& ws = spec.ws;
  Series hJ = jacobi_hilbert_closed(ws, std::min(socle_bound(ws), max_t));
  BiSeries out = BiSeries::term(1, 0, 0);
  out.truncate(max_t, max_s);
  for (const auto& [ni, mult] : hJ.terms()) {
    long reps = small_count(mult, "multiplicity");  // one factor per basis vector
    for (int j = 0; j + 1 <= max_s && ni + j * ws.d <= max_t; ++j) {
      BiSeries factor = BiSeries::geometric(ni + j * ws.d, j + 1, max_t, max_s);
      for (long rep = 0; rep < reps; ++rep) out *= factor;
    }
  }
  return out;
}

BiSeries chi_Ytilde(const SurfaceSpec& spec, int max_t, int max_s) {
  if (spec.tag == CatalogTag::A)
    throw InvalidInput("chi is not defined for type A surfaces");
  const WeightSystem& ws = spec.ws;
  Series numerator = (Series::term(1, 0) - Series::term(1, ws.d - ws.a)) *
                     (Series::term(1, 0) - Series::term(1, ws.d - ws.b)) *
                     (Series::term(1, 0) - Series::term(1, ws.d - ws.c));
  Series uni = numerator * Series::geometric(ws.a, max_t) *
               Series::geometric(ws.b, max_t) * Series::geometric(ws.c, max_t);
  BiSeries out =
      BiSeries::from_series(uni, 0) * BiSeries::geometric(ws.d - ws.a, 1, max_t, max_s);
  out.truncate(max_t, max_s);
  return out;
}

Series vq_series(const SurfaceSpec& spec, int q, int max_t) {
  if (q < 0) throw InvalidInput("twist index q must be >= 0");
  const WeightSystem& ws = spec.ws;
  Series numerator = Series::term(1, 0) - Series::term(1, ws.d - ws.c);
  Series f = numerator * Series::geometric(ws.a, max_t) * Series::geometric(ws.b, max_t) *
             Series::geometric(ws.c, max_t);
  f = f.shifted(q * (ws.d - ws.a));
  f.truncate(max_t);
  return f;
}

Series sections_character(int p, int w0, const WeightSystem& ws) {
  Series out;
  if (p < 0) return out;
  for (int i = 0; i <= p; ++i) out += Series::term(1, w0 + i * (ws.a - ws.b));
  return out;
}

BiSeries chi_from_twists(const std::vector<Series>& vqs, const WeightSystem& ws,
                         int max_t, int max_q) {
  if (static_cast<int>(vqs.size()) < max_q + 3)
    throw InvalidInput("need twist characters for q = 0..max_q+2");
  int u_shift = ws.a - ws.b;
  BiSeries out;
  for (int q = 0; q <= max_q; ++q) {
    Series dq = vqs[q] - vqs[q + 1];
    Series dq1 = vqs[q + 1] - vqs[q + 2];
    Series eq = dq - dq1.shifted(u_shift);
    for (const auto& [e, c] : eq.terms()) {
      if (e < 0)
        throw InvalidInput("twist differences have negative t-support at q = " +
                           std::to_string(q));
      if (c < 0)
        throw InvalidInput("twist differences have a negative coefficient at q = " +
                           std::to_string(q));
    }
    out += BiSeries::from_series(eq, q);
  }
  out.truncate(max_t, max_q);
  return out;
}

BiSeries wreath_hh0_character(const Series& H, int d, int max_t, int max_s) {
  Series hx = as_exact(H);
  if (!hx.stored_empty() && hx.terms().begin()->first < 0)
    throw InvalidInput("character must live in nonnegative weights");
  BiSeries L;
  for (int j = 0; j + 1 <= max_s && j * d <= max_t; ++j)
    L += BiSeries::from_series(hx.shifted(j * d), j + 1);
  L.truncate(max_t, max_s);
  return sym_of_bigraded(L);
}

Series wreath_partition_row(const Series& H, int d, int n, int max_t) {
  Series hx = as_exact(H);
  Series out;
  out.truncate(max_t);
  for (const std::vector<int>& nu : partitions_of(n)) {
    // multiplicity of each part size: m_j parts of size j contribute
    // Sym^(m_j) of the copy shifted by (j-1)d.
    std::map<int, int> part_mult;
    for (int part : nu) part_mult[part] += 1;
    Series product = Series::term(1, 0).truncate(max_t);
    for (const auto& [part, m] : part_mult)
      product *= sym_power(hx.shifted((part - 1) * d), m, max_t);
    out += product;
  }
  return out;
}

BiSeries typeA_slice_character(int m, int max_t, int max_s) {
  if (m < 2) throw InvalidInput("family A needs m >= 2");
  BiSeries out;
  for (int k = 0; k + 1 <= max_s && 2 * m * k <= max_t; ++k)
    for (int j = 0; j <= m - 2; ++j) {
      int t = 2 * (m * k + j);
      if (t > max_t) break;
      out += BiSeries::term(1, t, k + 1);
    }
  out.truncate(max_t, max_s);
  return out;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  auto rec = [&](auto&& self, int rest, int max_part) -> void {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (int part = std::min(rest, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, rest - part, part);
      current.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace hpzero
