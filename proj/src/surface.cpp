#include "hpzero/surface.hpp"

#include <json.hpp>

#include <numeric>

#include "hpzero/jacobi.hpp"

namespace hpzero {

namespace {

SparsePolynomial mono(int coef, int i, int j, int k) {
  return SparsePolynomial::monomial(coef, Monomial{i, j, k});
}

SparsePolynomial mono(const Rational& coef, int i, int j, int k) {
  return SparsePolynomial::monomial(coef, Monomial{i, j, k});
}

}  // namespace

SurfaceSpec catalog(CatalogTag tag, int m, const Rational& lambda) {
  SurfaceSpec s;
  s.tag = tag;
  switch (tag) {
    case CatalogTag::A:
      if (m < 2) throw InvalidInput("family A needs --m >= 2");
      s.ws = WeightSystem(2, m, m, 2 * m);
      s.Q = mono(1, m, 0, 0) + mono(1, 0, 2, 0) + mono(1, 0, 0, 2);
      s.m = m;
      s.name = "A" + std::to_string(m - 1);
      break;
    case CatalogTag::D:
      if (m < 2) throw InvalidInput("family D needs --m >= 2");
      s.ws = WeightSystem(2, m, m + 1, 2 * m + 2);
      s.Q = mono(1, m + 1, 0, 0) + mono(1, 1, 2, 0) + mono(1, 0, 0, 2);
      s.m = m;
      s.name = "D" + std::to_string(m + 2);
      break;
    case CatalogTag::E6:
      s.ws = WeightSystem(3, 4, 6, 12);
      s.Q = mono(1, 4, 0, 0) + mono(1, 0, 3, 0) + mono(1, 0, 0, 2);
      s.name = "E6";
      break;
    case CatalogTag::E7:
      s.ws = WeightSystem(4, 6, 9, 18);
      s.Q = mono(1, 3, 1, 0) + mono(1, 0, 3, 0) + mono(1, 0, 0, 2);
      s.name = "E7";
      break;
    case CatalogTag::E8:
      s.ws = WeightSystem(6, 10, 15, 30);
      s.Q = mono(1, 5, 0, 0) + mono(1, 0, 3, 0) + mono(1, 0, 0, 2);
      s.name = "E8";
      break;
    case CatalogTag::tE6:
      s.ws = WeightSystem(1, 1, 1, 3);
      s.Q = mono(1, 3, 0, 0) + mono(1, 0, 3, 0) + mono(1, 0, 0, 3) + mono(lambda, 1, 1, 1);
      s.lambda = lambda;
      s.name = "tE6";
      break;
    case CatalogTag::tE7:
      s.ws = WeightSystem(1, 1, 2, 4);
      s.Q = mono(1, 4, 0, 0) + mono(1, 0, 4, 0) + mono(1, 0, 0, 2) + mono(lambda, 1, 1, 1);
      s.lambda = lambda;
      s.name = "tE7";
      break;
    case CatalogTag::tE8:
      s.ws = WeightSystem(1, 2, 3, 6);
      s.Q = mono(1, 6, 0, 0) + mono(1, 0, 3, 0) + mono(1, 0, 0, 2) + mono(lambda, 1, 1, 1);
      s.lambda = lambda;
      s.name = "tE8";
      break;
    case CatalogTag::Custom:
      throw InvalidInput("custom surfaces come from --custom, not the catalog");
  }
  return s;
}

CatalogTag parse_tag(const std::string& tag) {
  if (tag == "A") return CatalogTag::A;
  if (tag == "D") return CatalogTag::D;
  if (tag == "E6") return CatalogTag::E6;
  if (tag == "E7") return CatalogTag::E7;
  if (tag == "E8") return CatalogTag::E8;
  if (tag == "tE6") return CatalogTag::tE6;
  if (tag == "tE7") return CatalogTag::tE7;
  if (tag == "tE8") return CatalogTag::tE8;
  throw InvalidInput("unknown surface tag '" + tag +
                     "' (expected A, D, E6, E7, E8, tE6, tE7 or tE8)");
}

std::string tag_name(CatalogTag tag) {
  switch (tag) {
    case CatalogTag::A: return "A";
    case CatalogTag::D: return "D";
    case CatalogTag::E6: return "E6";
    case CatalogTag::E7: return "E7";
    case CatalogTag::E8: return "E8";
    case CatalogTag::tE6: return "tE6";
    case CatalogTag::tE7: return "tE7";
    case CatalogTag::tE8: return "tE8";
    case CatalogTag::Custom: return "custom";
  }
  return "?";
}

std::vector<CatalogTag> catalog_tags() {
  return {CatalogTag::A,   CatalogTag::D,   CatalogTag::E6, CatalogTag::E7,
          CatalogTag::E8,  CatalogTag::tE6, CatalogTag::tE7, CatalogTag::tE8};
}

bool is_kleinian(CatalogTag tag) {
  switch (tag) {
    case CatalogTag::A:
    case CatalogTag::D:
    case CatalogTag::E6:
    case CatalogTag::E7:
    case CatalogTag::E8:
      return true;
    default:
      return false;
  }
}

bool is_elliptic(CatalogTag tag) {
  return tag == CatalogTag::tE6 || tag == CatalogTag::tE7 || tag == CatalogTag::tE8;
}

SurfaceSpec custom_surface(int a, int b, int c, const SparsePolynomial& Q) {
  if (Q.is_zero()) throw InvalidInput("custom surface equation is zero");
  if (a < 1 || a > b || b > c)
    throw InvalidInput("custom weights must satisfy 1 <= a <= b <= c");
  WeightSystem probe(a, b, c, 0);
  auto w = Q.homogeneous_weight(probe);
  if (!w) throw InvalidInput("custom surface equation is not weight-homogeneous");
  SurfaceSpec s;
  s.ws = WeightSystem(a, b, c, *w);
  s.Q = Q;
  s.tag = CatalogTag::Custom;
  s.name = "custom";
  return s;
}

SurfaceSpec surface_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad surface JSON: ") + e.what());
  }
  try {
    int a = j.at("a").get<int>();
    int b = j.at("b").get<int>();
    int c = j.at("c").get<int>();
    SparsePolynomial Q;
    for (const auto& term : j.at("terms")) {
      Rational coef;
      const auto& cj = term.at("coef");
      if (cj.is_string())
        coef = parse_rational(cj.get<std::string>());
      else if (cj.is_number_integer())
        coef = parse_rational(std::to_string(cj.get<long long>()));
      else
        throw InvalidInput("surface JSON coefficients must be strings or integers");
      const auto& ej = term.at("exp");
      if (!ej.is_array() || ej.size() != 3)
        throw InvalidInput("surface JSON exponents must be arrays [i, j, k]");
      int i = ej[0].get<int>(), jj = ej[1].get<int>(), k = ej[2].get<int>();
      if (i < 0 || jj < 0 || k < 0)
        throw InvalidInput("surface JSON exponents must be nonnegative");
      Q += SparsePolynomial::monomial(coef, Monomial{i, jj, k});
    }
    return custom_surface(a, b, c, Q);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad surface JSON: ") + e.what());
  }
}

bool ValidationReport::valid() const {
  for (const auto& check : checks)
    if (!check.passed) return false;
  return true;
}

ValidationReport validate(const SurfaceSpec& spec) {
  ValidationReport report;
  const WeightSystem& ws = spec.ws;

  bool weights_ok = ws.a >= 1 && ws.a <= ws.b && ws.b <= ws.c &&
                    ws.kappa == ws.d - (ws.a + ws.b + ws.c);
  report.checks.push_back({"weights ordered", weights_ok,
                           weights_ok ? "" : "need 1 <= a <= b <= c and consistent kappa"});

  bool nonzero = !spec.Q.is_zero();
  report.checks.push_back({"equation nonzero", nonzero, nonzero ? "" : "Q = 0"});

  bool homogeneous = false;
  if (nonzero && weights_ok) {
    auto w = spec.Q.homogeneous_weight(ws);
    homogeneous = w && *w == ws.d;
    report.checks.push_back({"equation homogeneous", homogeneous,
                             homogeneous ? "weight " + std::to_string(ws.d)
                                         : "terms not all of weight d"});
  } else {
    report.checks.push_back({"equation homogeneous", false, "skipped"});
  }

  if (weights_ok && nonzero && homogeneous) {
    int socle = socle_bound(ws);
    int margin = std::lcm(std::lcm(ws.a, ws.b), ws.c);
    int hi = socle + margin;
    GradedDims dims = jacobi_dims(spec, std::max(hi, 0));
    int bad_w = -1;
    for (int w = std::max(socle + 1, 0); w <= hi; ++w)
      if (dims.at(w) != 0) {
        bad_w = w;
        break;
      }
    report.checks.push_back(
        {"isolated singularity", bad_w < 0,
         bad_w < 0 ? "Jacobian ring vanishes in weights " +
                         std::to_string(std::max(socle + 1, 0)) + ".." + std::to_string(hi)
                   : "Jacobian ring has dimension " + std::to_string(dims.at(bad_w)) +
                         " in weight " + std::to_string(bad_w)});
  } else {
    report.checks.push_back({"isolated singularity", false, "skipped"});
  }
  return report;
}

int bracket_degree(const SurfaceSpec& spec) { return spec.ws.kappa; }

}  // namespace hpzero
