#include "hpzero/verify.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "hpzero/formulas.hpp"
#include "hpzero/hp0.hpp"
#include "hpzero/jacobi.hpp"

namespace hpzero {

bool VerifyReport::all_passed() const {
  for (const auto& check : checks)
    if (!check.passed) return false;
  return true;
}

std::vector<SurfaceSpec> default_verify_catalog() {
  std::vector<SurfaceSpec> out;
  for (int m = 2; m <= 4; ++m) out.push_back(catalog(CatalogTag::A, m));
  for (int m = 2; m <= 3; ++m) out.push_back(catalog(CatalogTag::D, m));
  out.push_back(catalog(CatalogTag::E6));
  out.push_back(catalog(CatalogTag::E7));
  out.push_back(catalog(CatalogTag::E8));
  out.push_back(catalog(CatalogTag::tE6));
  out.push_back(catalog(CatalogTag::tE7));
  out.push_back(catalog(CatalogTag::tE8));
  return out;
}

SparsePolynomial random_homogeneous(const WeightSystem& ws, int w, std::mt19937_64& rng) {
  std::vector<Monomial> basis = ambient_basis(ws, w);
  if (basis.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 2);
  std::uniform_int_distribution<std::size_t> count(1, std::min<std::size_t>(4, basis.size()));
  SparsePolynomial p;
  std::size_t terms = count(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    int c = num(rng);
    if (c == 0) c = 1;
    p += SparsePolynomial::monomial(Rational(c, den(rng)), basis[pick(rng)]);
  }
  return p;
}

namespace {

std::vector<int> nonempty_weights(const WeightSystem& ws, int max_w) {
  std::vector<int> out;
  for (int w = 1; w <= max_w; ++w)
    if (!ambient_basis(ws, w).empty()) out.push_back(w);
  return out;
}

}  // namespace

bool check_bracket_axiom(const SurfaceSpec& spec, const BracketTable& table,
                         BracketAxiom axiom, int samples, int max_weight,
                         std::uint64_t seed, std::string* detail) {
  std::mt19937_64 rng(seed);
  std::vector<int> weights = nonempty_weights(spec.ws, max_weight);
  if (weights.empty()) return true;
  std::uniform_int_distribution<std::size_t> pick(0, weights.size() - 1);
  auto random_poly = [&] {
    for (;;) {
      SparsePolynomial p = random_homogeneous(spec.ws, weights[pick(rng)], rng);
      if (!p.is_zero()) return p;
    }
  };
  for (int sample = 0; sample < samples; ++sample) {
    SparsePolynomial f = random_poly();
    SparsePolynomial g = random_poly();
    bool ok = true;
    std::string what;
    switch (axiom) {
      case BracketAxiom::Antisymmetry:
        ok = (bracket_raw(f, g, table) + bracket_raw(g, f, table)).is_zero();
        what = "{f,g} + {g,f} != 0";
        break;
      case BracketAxiom::Leibniz: {
        SparsePolynomial h = random_poly();
        ok = (bracket_raw(f * g, h, table) - f * bracket_raw(g, h, table) -
              g * bracket_raw(f, h, table))
                 .is_zero();
        what = "Leibniz rule violated";
        break;
      }
      case BracketAxiom::Jacobi: {
        SparsePolynomial h = random_poly();
        SparsePolynomial sum = bracket_raw(f, bracket_raw(g, h, table), table) +
                               bracket_raw(g, bracket_raw(h, f, table), table) +
                               bracket_raw(h, bracket_raw(f, g, table), table);
        ok = normal_form(sum, spec.Q).is_zero();
        what = "Jacobi identity violated mod Q";
        break;
      }
      case BracketAxiom::Casimir:
        ok = bracket_raw(spec.Q, f, table).is_zero();
        what = "{Q,f} != 0 in C[x,y,z]";
        break;
      case BracketAxiom::WeightShift: {
        SparsePolynomial br = bracket(f, g, spec, table);
        if (!br.is_zero()) {
          auto bw = br.homogeneous_weight(spec.ws);
          ok = bw && *bw == *f.homogeneous_weight(spec.ws) +
                             *g.homogeneous_weight(spec.ws) + spec.ws.kappa;
        }
        what = "|{f,g}| != |f| + |g| + kappa";
        break;
      }
    }
    if (!ok) {
      if (detail)
        *detail = what + " (sample " + std::to_string(sample) + ", surface " + spec.name + ")";
      return false;
    }
  }
  return true;
}

namespace {

std::string window_ts(int max_t, int max_s) {
  return "t<=" + std::to_string(max_t) + ", s<=" + std::to_string(max_s);
}

void add_check(VerifyReport& report, const std::string& name, const std::string& window,
               const std::function<std::pair<bool, std::string>()>& body) {
  CheckResult result;
  result.name = name;
  result.window = window;
  try {
    auto [passed, detail] = body();
    result.passed = passed;
    result.detail = detail;
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = e.what();
  }
  report.checks.push_back(result);
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  VerifyReport report;
  std::vector<SurfaceSpec> surfaces =
      opts.surfaces.empty() ? default_verify_catalog() : opts.surfaces;

  for (const SurfaceSpec& spec : surfaces) {
    add_check(report, "bracket axioms (" + spec.name + ")",
              "weight<=" + std::to_string(opts.max_sample_weight) + ", " +
                  std::to_string(opts.samples) + " samples/axiom",
              [&]() -> std::pair<bool, std::string> {
                BracketTable table = canonical_brackets(spec);
                std::string detail;
                for (BracketAxiom axiom :
                     {BracketAxiom::Antisymmetry, BracketAxiom::Leibniz,
                      BracketAxiom::Jacobi, BracketAxiom::Casimir,
                      BracketAxiom::WeightShift}) {
                  if (!check_bracket_axiom(spec, table, axiom, opts.samples,
                                           opts.max_sample_weight,
                                           opts.seed + static_cast<int>(axiom), &detail))
                    return {false, detail};
                }
                return {true, ""};
              });

    add_check(report, "hp0 at n=1 matches Jacobian ring (" + spec.name + ")",
              "w<=" + std::to_string(opts.max_weight),
              [&]() -> std::pair<bool, std::string> {
                Hp0Options hopts;
                hopts.matrix_cap = opts.matrix_cap;
                hopts.workers = opts.workers;
                HP0Table brute = hp0_dims(spec, 1, opts.max_weight, hopts);
                GradedDims jac = jacobi_dims(spec, opts.max_weight, opts.workers);
                for (int w = 0; w <= opts.max_weight; ++w)
                  if (brute.dims.at(w) != jac.at(w))
                    return {false, "mismatch in weight " + std::to_string(w)};
                return {true, ""};
              });

    add_check(report, "Sym(generators) matches product expansion (" + spec.name + ")",
              window_ts(opts.max_t, opts.max_s),
              [&]() -> std::pair<bool, std::string> {
                BiSeries sym = sym_of_bigraded(generator_character(spec, opts.max_t, opts.max_s));
                BiSeries product = hp0_product_formula(spec, opts.max_t, opts.max_s);
                std::string why;
                bool same = biseries_equal_on(sym, product, opts.max_t, opts.max_s, &why);
                return {same, why};
              });

    if (spec.tag != CatalogTag::A) {
      add_check(report, "chi reassembled from twists (" + spec.name + ")",
                window_ts(opts.max_t, opts.max_s),
                [&]() -> std::pair<bool, std::string> {
                  int pad = spec.ws.b - spec.ws.a;
                  std::vector<Series> vqs;
                  for (int q = 0; q <= opts.max_s + 2; ++q)
                    vqs.push_back(vq_series(spec, q, opts.max_t + pad));
                  BiSeries from_twists =
                      chi_from_twists(vqs, spec.ws, opts.max_t, opts.max_s);
                  BiSeries closed = chi_Ytilde(spec, opts.max_t, opts.max_s);
                  std::string why;
                  bool same =
                      biseries_equal_on(from_twists, closed, opts.max_t, opts.max_s, &why);
                  return {same, why};
                });
    }

    add_check(report, "wreath character (" + spec.name + ")",
              window_ts(opts.max_t, opts.max_s),
              [&]() -> std::pair<bool, std::string> {
                Series hJ = jacobi_hilbert_closed(spec.ws, socle_bound(spec.ws));
                BiSeries wreath = wreath_hh0_character(hJ, spec.ws.d, opts.max_t, opts.max_s);
                BiSeries product = hp0_product_formula(spec, opts.max_t, opts.max_s);
                std::string why;
                if (!biseries_equal_on(wreath, product, opts.max_t, opts.max_s, &why))
                  return {false, "against product expansion: " + why};
                for (int nn = 0; nn <= opts.max_s; ++nn) {
                  Series row = wreath_partition_row(hJ, spec.ws.d, nn, opts.max_t);
                  if (!series_equal_on(wreath.s_row(nn), row, 0, opts.max_t, &why))
                    return {false, "against partition rows at s^" + std::to_string(nn) +
                                       ": " + why};
                }
                return {true, ""};
              });

    if (spec.tag == CatalogTag::A) {
      add_check(report, "type A slice character (" + spec.name + ")",
                window_ts(opts.max_t, opts.max_s),
                [&]() -> std::pair<bool, std::string> {
                  BiSeries slice = typeA_slice_character(spec.m, opts.max_t, opts.max_s);
                  BiSeries gen = generator_character(spec, opts.max_t, opts.max_s);
                  std::string why;
                  bool same = biseries_equal_on(slice, gen, opts.max_t, opts.max_s, &why);
                  return {same, why};
                });
    }
  }
  return report;
}

}  // namespace hpzero
