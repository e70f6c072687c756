#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hpzero/formulas.hpp"
#include "hpzero/hp0.hpp"
#include "hpzero/jacobi.hpp"
#include "hpzero/render.hpp"
#include "hpzero/verify.hpp"

namespace {

using namespace hpzero;

struct Options {
  std::string surface;
  int m = 2;
  std::string lambda = "1";
  std::string custom;
  int n = 1;
  int max_weight = -1;  // -1 = command-specific default
  int max_t = 40;
  int max_s = 6;
  std::string format = "table";
  long long cap = 2'000'000;
  int workers = 0;
};

void add_surface_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--surface", o.surface, "catalog tag: A, D, E6, E7, E8, tE6, tE7, tE8");
  cmd->add_option("--m", o.m, "family parameter for A and D (m >= 2)");
  cmd->add_option("--lambda", o.lambda, "modulus for tE6/tE7/tE8, e.g. 1 or -3/2");
  cmd->add_option("--custom", o.custom, "path to a custom surface JSON file");
}

void add_format_flag(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
}

SurfaceSpec resolve_surface(const Options& o) {
  if (!o.custom.empty() && !o.surface.empty())
    throw InvalidInput("--surface and --custom are mutually exclusive");
  if (!o.custom.empty()) {
    std::ifstream in(o.custom);
    if (!in) throw InvalidInput("cannot read custom surface file '" + o.custom + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return surface_from_json(text.str());
  }
  if (o.surface.empty()) throw InvalidInput("need --surface <tag> or --custom <file>");
  return catalog(parse_tag(o.surface), o.m, parse_rational(o.lambda));
}

// Prints the validation report of an invalid surface and throws.
void require_valid(const SurfaceSpec& spec) {
  ValidationReport report = validate(spec);
  if (report.valid()) return;
  for (const auto& check : report.checks)
    std::cerr << (check.passed ? "  [ok]   " : "  [FAIL] ") << check.name
              << (check.detail.empty() ? "" : ": " + check.detail) << "\n";
  throw InvalidInput("surface '" + spec.name + "' failed validation");
}

std::string bool_str(bool v) { return v ? "true" : "false"; }

int emit(const Options& o, const std::vector<std::string>& headers,
         const std::vector<std::vector<std::string>>& rows, const Json& json) {
  if (o.format == "json")
    std::cout << render_json(json);
  else if (o.format == "csv")
    std::cout << render_csv(headers, rows);
  else
    std::cout << render_table(headers, rows);
  return 0;
}

Json validation_json(const ValidationReport& report) {
  Json checks = Json::array();
  for (const auto& check : report.checks)
    checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  return {{"valid", report.valid()}, {"checks", checks}};
}

struct FamilyRow {
  std::string tag, a, b, c, d, kappa, equation, parameter;
};

std::vector<FamilyRow> family_rows() {
  return {
      {"A", "2", "m", "m", "2m", "-2", "x^m + y^2 + z^2", "--m >= 2 (surface A_(m-1))"},
      {"D", "2", "m", "m+1", "2m+2", "-1", "x^(m+1) + x*y^2 + z^2", "--m >= 2 (surface D_(m+2))"},
      {"E6", "3", "4", "6", "12", "-1", "x^4 + y^3 + z^2", ""},
      {"E7", "4", "6", "9", "18", "-1", "x^3*y + y^3 + z^2", ""},
      {"E8", "6", "10", "15", "30", "-1", "x^5 + y^3 + z^2", ""},
      {"tE6", "1", "1", "1", "3", "0", "x^3 + y^3 + z^3 + lambda*x*y*z", "--lambda (default 1)"},
      {"tE7", "1", "1", "2", "4", "0", "x^4 + y^4 + z^2 + lambda*x*y*z", "--lambda (default 1)"},
      {"tE8", "1", "2", "3", "6", "0", "x^6 + y^3 + z^2 + lambda*x*y*z", "--lambda (default 1)"},
  };
}

int cmd_surface_list(const Options& o) {
  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  for (const FamilyRow& f : family_rows()) {
    rows.push_back({f.tag, f.a, f.b, f.c, f.d, f.kappa, f.equation, f.parameter});
    jrows.push_back({{"tag", f.tag},
                     {"a", f.a},
                     {"b", f.b},
                     {"c", f.c},
                     {"d", f.d},
                     {"kappa", f.kappa},
                     {"equation", f.equation},
                     {"parameter", f.parameter}});
  }
  return emit(o, {"tag", "a", "b", "c", "d", "kappa", "equation", "parameter"}, rows,
              Json{{"surfaces", jrows}});
}

int cmd_surface_show(const Options& o) {
  SurfaceSpec spec = resolve_surface(o);
  ValidationReport report = validate(spec);

  std::vector<std::vector<std::string>> rows;
  rows.push_back({"name", spec.name});
  rows.push_back({"weights", std::to_string(spec.ws.a) + "," + std::to_string(spec.ws.b) +
                                 "," + std::to_string(spec.ws.c)});
  rows.push_back({"degree", std::to_string(spec.ws.d)});
  rows.push_back({"kappa", std::to_string(spec.ws.kappa)});
  rows.push_back({"equation", spec.Q.str()});
  for (const auto& check : report.checks)
    rows.push_back({"check: " + check.name,
                    (check.passed ? "ok" : "FAIL") +
                        (check.detail.empty() ? "" : " (" + check.detail + ")")});

  Json j;
  j["name"] = spec.name;
  j["tag"] = tag_name(spec.tag);
  j["a"] = spec.ws.a;
  j["b"] = spec.ws.b;
  j["c"] = spec.ws.c;
  j["d"] = spec.ws.d;
  j["kappa"] = spec.ws.kappa;
  if (spec.tag == CatalogTag::A || spec.tag == CatalogTag::D) j["m"] = spec.m;
  if (is_elliptic(spec.tag)) j["lambda"] = to_string(spec.lambda);
  j["equation"] = spec.Q.str();
  j["validation"] = validation_json(report);

  if (report.valid()) {
    rows.push_back({"socle bound", std::to_string(socle_bound(spec.ws))});
    rows.push_back({"milnor number", std::to_string(milnor_number(spec))});
    std::vector<int> exps = jacobi_exponents(spec);
    std::string estr;
    for (int e : exps) estr += (estr.empty() ? "" : " ") + std::to_string(e);
    rows.push_back({"jacobian weights", estr});
    j["socle_bound"] = socle_bound(spec.ws);
    j["milnor"] = milnor_number(spec);
    j["jacobian_weights"] = exps;
    if (is_kleinian(spec.tag)) {
      CoxeterData cox = coxeter_data(spec);
      std::string cstr;
      for (int e : cox.exponents) cstr += (cstr.empty() ? "" : " ") + std::to_string(e);
      rows.push_back({"coxeter exponents", cstr});
      rows.push_back({"coxeter number", std::to_string(cox.coxeter_number)});
      j["coxeter"] = {{"exponents", cox.exponents}, {"h", cox.coxeter_number}};
    }
  }

  int rc = emit(o, {"field", "value"}, rows, j);
  (void)rc;
  return report.valid() ? 0 : 2;
}

int cmd_jacobi(const Options& o) {
  SurfaceSpec spec = resolve_surface(o);
  require_valid(spec);
  int max_w = o.max_weight >= 0 ? o.max_weight : socle_bound(spec.ws);
  GradedDims brute = jacobi_dims(spec, max_w, o.workers);
  Series closed = jacobi_hilbert_closed(spec.ws, max_w);

  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  bool all_equal = true;
  for (int w = 0; w <= max_w; ++w) {
    Int cf = closed.coeff(w);
    bool equal = Int(brute.at(w)) == cf;
    all_equal = all_equal && equal;
    rows.push_back({std::to_string(w), std::to_string(brute.at(w)), to_string(cf),
                    bool_str(equal)});
    jrows.push_back({{"weight", w},
                     {"dim_bruteforce", brute.at(w)},
                     {"dim_closedform", int_json(cf)},
                     {"equal", equal}});
  }
  Json j;
  j["surface"] = spec.name;
  j["max_weight"] = max_w;
  j["rows"] = jrows;
  j["milnor"] = brute.total();
  j["all_equal"] = all_equal;
  emit(o, {"weight", "dim_bruteforce", "dim_closedform", "equal"}, rows, j);
  return all_equal ? 0 : 1;
}

int cmd_hp0(const Options& o) {
  SurfaceSpec spec = resolve_surface(o);
  require_valid(spec);
  int max_w = o.max_weight >= 0 ? o.max_weight : 2 * spec.ws.d;
  Hp0Options hopts;
  hopts.matrix_cap = o.cap;
  hopts.workers = o.workers;
  ComparisonReport report = hp0_compare(spec, o.n, max_w, hopts);

  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  for (const ComparisonRow& row : report.rows) {
    rows.push_back({std::to_string(row.w), std::to_string(row.brute),
                    std::to_string(row.closed), bool_str(row.equal)});
    jrows.push_back({{"weight", row.w},
                     {"dim_bruteforce", row.brute},
                     {"dim_closedform", row.closed},
                     {"equal", row.equal}});
  }
  Json j;
  j["surface"] = spec.name;
  j["n"] = report.n;
  j["max_weight"] = report.max_w;
  j["rows"] = jrows;
  j["all_equal"] = report.all_equal;
  emit(o, {"weight", "dim_bruteforce", "dim_closedform", "equal"}, rows, j);
  return report.all_equal ? 0 : 1;
}

int emit_biseries(const Options& o, const std::string& kind, const std::string& name,
                  const BiSeries& f) {
  std::vector<std::pair<std::pair<int, int>, Int>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& l, const auto& r) {
    return std::pair(l.first.second, l.first.first) < std::pair(r.first.second, r.first.first);
  });
  std::vector<std::vector<std::string>> rows;
  for (const auto& [key, coef] : terms)
    rows.push_back({std::to_string(key.first), std::to_string(key.second), to_string(coef)});
  Json j;
  j["kind"] = kind;
  if (!name.empty()) j["surface"] = name;
  j["series"] = biseries_json(f);
  return emit(o, {"t", "s", "coef"}, rows, j);
}

int emit_series(const Options& o, const std::string& kind, const std::string& name,
                const Series& f) {
  std::vector<std::vector<std::string>> rows;
  for (const auto& [e, coef] : f.terms())
    rows.push_back({std::to_string(e), to_string(coef)});
  Json j;
  j["kind"] = kind;
  if (!name.empty()) j["surface"] = name;
  j["series"] = series_json(f);
  return emit(o, {"t", "coef"}, rows, j);
}

int cmd_series(const Options& o, const std::string& kind) {
  if (kind == "slice") {
    int m = o.m;
    if (!o.surface.empty()) {
      SurfaceSpec spec = resolve_surface(o);
      if (spec.tag != CatalogTag::A)
        throw InvalidInput("series slice is defined for the type A family");
      m = spec.m;
    }
    return emit_biseries(o, kind, "A" + std::to_string(m - 1),
                         typeA_slice_character(m, o.max_t, o.max_s));
  }
  SurfaceSpec spec = resolve_surface(o);
  require_valid(spec);
  if (kind == "generator")
    return emit_biseries(o, kind, spec.name, generator_character(spec, o.max_t, o.max_s));
  if (kind == "product")
    return emit_biseries(o, kind, spec.name, hp0_product_formula(spec, o.max_t, o.max_s));
  if (kind == "chi")
    return emit_biseries(o, kind, spec.name, chi_Ytilde(spec, o.max_t, o.max_s));
  if (kind == "wreath") {
    Series hJ = jacobi_hilbert_closed(spec.ws, socle_bound(spec.ws));
    return emit_biseries(o, kind, spec.name,
                         wreath_hh0_character(hJ, spec.ws.d, o.max_t, o.max_s));
  }
  if (kind == "vq") return emit_series(o, kind, spec.name, vq_series(spec, o.n, o.max_t));
  throw InvalidInput("unknown series kind '" + kind + "'");
}

int cmd_verify(const Options& o) {
  VerifyOptions vopts;
  if (o.max_weight >= 0) vopts.max_weight = o.max_weight;
  vopts.max_t = o.max_t;
  vopts.max_s = o.max_s;
  vopts.matrix_cap = o.cap;
  vopts.workers = o.workers;
  if (!o.surface.empty() || !o.custom.empty()) {
    SurfaceSpec spec = resolve_surface(o);
    require_valid(spec);
    vopts.surfaces.push_back(spec);
  }
  VerifyReport report = run_verify(vopts);

  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  for (const CheckResult& check : report.checks) {
    rows.push_back({check.name, check.passed ? "pass" : "FAIL", check.window, check.detail});
    jrows.push_back({{"name", check.name},
                     {"passed", check.passed},
                     {"window", check.window},
                     {"detail", check.detail}});
  }
  Json j;
  j["checks"] = jrows;
  j["all_passed"] = report.all_passed();
  emit(o, {"check", "result", "window", "detail"}, rows, j);
  return report.all_passed() ? 0 : 1;
}

int run(int argc, char** argv) {
  CLI::App app{"exact zeroth Poisson homology of weighted-homogeneous surface "
               "singularities and their symmetric powers"};
  app.require_subcommand(1);
  Options o;

  CLI::App* surface = app.add_subcommand("surface", "catalog inspection");
  surface->require_subcommand(1);
  CLI::App* list = surface->add_subcommand("list", "list the surface families");
  add_format_flag(list, o);
  CLI::App* show = surface->add_subcommand("show", "weights, equation and validation");
  std::string show_tag;
  show->add_option("tag", show_tag, "catalog tag (alternative to --surface)");
  add_surface_flags(show, o);
  add_format_flag(show, o);

  CLI::App* jacobi = app.add_subcommand("jacobi", "graded Jacobian ring dimensions");
  add_surface_flags(jacobi, o);
  add_format_flag(jacobi, o);
  jacobi->add_option("--max-weight", o.max_weight, "top weight (default: socle bound)");
  jacobi->add_option("--workers", o.workers, "worker threads (0 = all cores)");

  CLI::App* hp0 = app.add_subcommand(
      "hp0", "brute-force Poisson homology of Sym^n versus the closed form");
  add_surface_flags(hp0, o);
  add_format_flag(hp0, o);
  hp0->add_option("--n", o.n, "symmetric power (default 1)");
  hp0->add_option("--max-weight", o.max_weight, "top weight (default: 2d)");
  hp0->add_option("--cap", o.cap, "max matrix nonzeros per weight slice");
  hp0->add_option("--workers", o.workers, "worker threads (0 = all cores)");

  CLI::App* series = app.add_subcommand("series", "closed-form characters");
  std::string kind;
  series->add_option("kind", kind, "generator, product, chi, vq, wreath or slice")
      ->required()
      ->check(CLI::IsMember({"generator", "product", "chi", "vq", "wreath", "slice"}));
  add_surface_flags(series, o);
  add_format_flag(series, o);
  series->add_option("--n", o.n, "twist index q for `series vq`");
  series->add_option("--max-t", o.max_t, "t-truncation (default 40)");
  series->add_option("--max-s", o.max_s, "s-truncation (default 6)");

  CLI::App* verify = app.add_subcommand("verify", "cross-check suite");
  add_surface_flags(verify, o);
  add_format_flag(verify, o);
  verify->add_option("--max-weight", o.max_weight, "dimension-check window (default 8)");
  verify->add_option("--max-t", o.max_t, "t-window for series identities (default 24)")
      ->default_val(24);
  verify->add_option("--max-s", o.max_s, "s-window for series identities (default 4)")
      ->default_val(4);
  verify->add_option("--cap", o.cap, "max matrix nonzeros per weight slice");
  verify->add_option("--workers", o.workers, "worker threads (0 = all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list->parsed()) return cmd_surface_list(o);
  if (show->parsed()) {
    if (!show_tag.empty()) {
      if (!o.surface.empty() && o.surface != show_tag)
        throw InvalidInput("conflicting surface tags");
      o.surface = show_tag;
    }
    return cmd_surface_show(o);
  }
  if (jacobi->parsed()) return cmd_jacobi(o);
  if (hp0->parsed()) return cmd_hp0(o);
  if (series->parsed()) return cmd_series(o, kind);
  if (verify->parsed()) return cmd_verify(o);
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const hpzero::CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const hpzero::InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
