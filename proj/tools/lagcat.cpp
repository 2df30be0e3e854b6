// lagcat: command-line front end for the Lagrangian-correspondence library.
//
// Subcommands: check, compose, cat-compose, classify, convert, index,
// demo (cylinder | counterexample), sweep. All file I/O uses the JSON
// document formats of the io module. Reports are emitted with sorted keys
// and shortest round-trip numbers, so a fixed seed and fixed inputs produce
// byte-identical output.
//
// Exit codes: 0 all checks passed, 1 a check failed or the data violated a
// mathematical invariant, 2 malformed input (unreadable file, invalid JSON,
// bad command line, invalid LAGCAT_TOL).

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lagcat/clifford.hpp"
#include "lagcat/composition.hpp"
#include "lagcat/ft_demo.hpp"
#include "lagcat/io.hpp"
#include "lagcat/polarization.hpp"
#include "lagcat/random.hpp"
#include "lagcat/sequence_model.hpp"

namespace {

using nlohmann::json;
using namespace lagcat;

// Agreement tolerance between the block-formula and subspace compositions,
// and for round-trip residuals in sweeps.
constexpr double kSweepTol = 1e-8;
// Dense cross-check tolerance for the demo reports.
constexpr double kDemoTol = 1e-9;
// Numerical floor of a raw singular value next to O(1) entries; below it a
// computed value is indistinguishable from zero and decay cannot be resolved.
constexpr double kSvFloor = 1e-12;

struct GlobalOpts {
  Tolerances tol;
  std::string format = "json";  // json | text
  std::string output;           // empty = stdout
};

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), Errc::parse_error, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), Errc::invalid_value, "cannot write file: " + path);
  out << content;
  require(static_cast<bool>(out), Errc::invalid_value, "cannot write file: " + path);
}

const char* field_name(Field f) { return f == Field::Real ? "R" : "C"; }

// Flattens a report into "dotted.path = value" lines for the text format.
void render_text(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    if (j.empty()) out += prefix + " = {}\n";
    for (auto it = j.begin(); it != j.end(); ++it) {
      render_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    }
  } else if (j.is_array()) {
    if (j.empty()) out += prefix + " = []\n";
    std::size_t i = 0;
    for (const auto& v : j) render_text(v, prefix + "[" + std::to_string(i++) + "]", out);
  } else {
    out += prefix + " = " + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

void emit(const GlobalOpts& o, const json& report) {
  std::string text;
  if (o.format == "text") {
    render_text(report, "", text);
  } else {
    text = report.dump(2);
    text += '\n';
  }
  if (o.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.output, text);
  }
}

json space_json(const SuperSpace& v) {
  return json{{"dim_plus", v.dim_plus()},
              {"dim_minus", v.dim_minus()},
              {"field", field_name(v.field())},
              {"degree", v.degree()}};
}

Correspondence load_correspondence(const std::string& path, const Tolerances& tol) {
  return doc_to_correspondence(lagrangian_from_json(read_text_file(path), tol), tol);
}

PolarizedSpace load_polarized(const std::string& path, const Tolerances& tol) {
  return polarized_from_json(read_text_file(path), tol);
}

// --- check ---------------------------------------------------------------------

int run_check(const GlobalOpts& o, const std::string& input) {
  const LagrangianDoc doc = lagrangian_from_json(read_text_file(input), o.tol);

  json checks = json::array();
  bool all = true;
  const auto add = [&](const char* name, bool pass, json detail) {
    detail["check"] = name;
    detail["pass"] = pass;
    checks.push_back(std::move(detail));
    all = all && pass;
  };

  json report;
  report["command"] = "check";
  report["input"] = input;
  report["repr"] = doc.repr;
  report["two_space"] = is_correspondence_doc(doc);

  try {
    if (is_correspondence_doc(doc)) {
      if (doc.repr == "graph_T") {
        const double r = lagrangian_graph_residual(doc.space0, *doc.space1, doc.matrix);
        add("lagrangian_graph",
            is_lagrangian_graph(doc.space0, *doc.space1, doc.matrix, o.tol),
            {{"residual", r}});
      }
      const Correspondence c = doc_to_correspondence(doc, o.tol);
      const Matrix& u = c.u();
      const Matrix id = Matrix::identity(u.rows(), u.field);
      const double ur =
          std::max(hs_norm(u.adjoint() * u - id), hs_norm(u * u.adjoint() - id));
      add("graph_unitary", ur <= o.tol.ortho, {{"residual", ur}, {"tolerance", o.tol.ortho}});

      const SuperSpace w = product_space(c.source(), c.target());
      const double ir = isotropy_residual(w, c.frame());
      add("isotropic", ir <= o.tol.proj, {{"residual", ir}, {"tolerance", o.tol.proj}});

      const Classification cls = classify(w, c.frame(), o.tol);
      add("lagrangian", cls.kind == LagKind::Lagrangian,
          {{"dim", cls.dim}, {"codim", cls.codim}});

      report["source"] = space_json(c.source());
      report["target"] = space_json(c.target());
      report["general_position"] = general_position(c);
    } else {
      const Frame f = doc_to_frame(doc, o.tol);
      const Matrix cols = f.cols();
      const Matrix id = Matrix::identity(f.dim(), f.field());
      const double fr = hs_norm(cols.adjoint() * cols - id);
      add("frame_orthonormal", fr <= o.tol.ortho,
          {{"residual", fr}, {"tolerance", o.tol.ortho}});

      const double ir = isotropy_residual(doc.space0, f);
      add("isotropic", ir <= o.tol.proj, {{"residual", ir}, {"tolerance", o.tol.proj}});

      const Classification cls = classify(doc.space0, f, o.tol);
      report["classification"] =
          json{{"kind", cls.kind == LagKind::Lagrangian ? "lagrangian" : "sub_lagrangian"},
               {"dim", cls.dim},
               {"codim", cls.codim}};
      report["space"] = space_json(doc.space0);
    }
  } catch (const Error& e) {
    if (e.code() == Errc::parse_error) throw;
    add("well_formed", false, {{"error", e.what()}, {"code", to_string(e.code())}});
  }

  report["checks"] = checks;
  report["pass"] = all;
  emit(o, report);
  return all ? 0 : 1;
}

// --- compose -------------------------------------------------------------------

int run_compose(const GlobalOpts& o, const std::string& left, const std::string& right,
                const std::string& method, const std::string& result_path) {
  const Correspondence a = load_correspondence(left, o.tol);
  const Correspondence b = load_correspondence(right, o.tol);

  json report;
  report["command"] = "compose";
  report["left"] = left;
  report["right"] = right;
  report["method"] = method;

  std::optional<Correspondence> result;
  bool pass = true;

  if (method == "formula" || method == "both") {
    ComposeResult r = compose_formula(a, b, o.tol);
    json jf{{"gap", r.gap},
            {"used_fallback", r.used_fallback},
            {"unitarity_residual", r.unitarity_residual}};
    if (!r.warning.empty()) jf["warning"] = r.warning;
    report["formula"] = std::move(jf);
    result = std::move(r.corr);
  }
  if (method == "bruteforce" || method == "both") {
    Correspondence rb = compose_bruteforce(a, b, o.tol);
    report["bruteforce"] = json{{"dim", rb.frame().dim()}};
    if (method == "both") {
      const double agree = subspace_distance(result->frame(), rb.frame());
      report["agreement"] = agree;
      report["agreement_tolerance"] = kSweepTol;
      pass = agree <= kSweepTol;
    } else {
      result = std::move(rb);
    }
  }

  report["source"] = space_json(result->source());
  report["target"] = space_json(result->target());
  const std::string doc = lagrangian_to_json(correspondence_doc(*result));
  if (result_path.empty()) {
    report["result"] = json::parse(doc);
  } else {
    write_text_file(result_path, doc + "\n");
    report["result_file"] = result_path;
  }

  report["pass"] = pass;
  emit(o, report);
  return pass ? 0 : 1;
}

// --- cat-compose ---------------------------------------------------------------

json morphism_json(const MorphismClass& m) {
  json j{{"type", to_string(m.type)},
         {"offdiag_residual", m.offdiag_residual},
         {"dev1", m.dev1},
         {"dev2", m.dev2}};
  j["has_graph_unitary"] = m.graph_unitary.has_value();
  return j;
}

int run_cat_compose(const GlobalOpts& o, const std::string& p0_path,
                    const std::string& p1_path, const std::string& p2_path,
                    const std::string& left, const std::string& right, double threshold,
                    const std::string& result_path) {
  const PolarizedSpace p0 = load_polarized(p0_path, o.tol);
  const PolarizedSpace p1 = load_polarized(p1_path, o.tol);
  const PolarizedSpace p2 = load_polarized(p2_path, o.tol);
  const Correspondence c01 = load_correspondence(left, o.tol);
  const Correspondence c12 = load_correspondence(right, o.tol);

  const CatComposeResult r = compose_in_category(p0, p1, p2, c01, c12, threshold, o.tol);

  json report;
  report["command"] = "cat-compose";
  report["threshold"] = threshold;
  report["in1"] = morphism_json(r.in1);
  report["in2"] = morphism_json(r.in2);
  report["out"] = morphism_json(r.out);
  report["predicted"] = to_string(r.predicted);
  report["compose"] = json{{"gap", r.composed.gap},
                           {"used_fallback", r.composed.used_fallback},
                           {"unitarity_residual", r.composed.unitarity_residual}};
  if (!result_path.empty()) {
    write_text_file(result_path,
                    lagrangian_to_json(correspondence_doc(r.composed.corr)) + "\n");
    report["result_file"] = result_path;
  }
  report["pass"] = true;  // compose_in_category verifies the prediction itself
  emit(o, report);
  return 0;
}

// --- classify ------------------------------------------------------------------

int run_classify(const GlobalOpts& o, const std::string& p0_path,
                 const std::string& p1_path, const std::string& input, double threshold) {
  const PolarizedSpace p0 = load_polarized(p0_path, o.tol);
  const PolarizedSpace p1 = load_polarized(p1_path, o.tol);
  const Correspondence c = load_correspondence(input, o.tol);

  const MorphismClass m = classify_morphism(p0, p1, c, threshold, o.tol);

  json report = morphism_json(m);
  report["command"] = "classify";
  report["threshold"] = threshold;
  const bool pass = m.type != MorphismType::Neither;
  report["pass"] = pass;
  emit(o, report);
  return pass ? 0 : 1;
}

// --- convert -------------------------------------------------------------------

int run_convert(const GlobalOpts& o, const std::string& mode, const std::string& input) {
  const Correspondence c =
      doc_to_correspondence(lagrangian_from_json(read_text_file(input), o.tol), o.tol);
  // t-to-u also normalizes any correspondence document to its graph unitary.
  const LagrangianDoc out = mode == "u-to-t"
                                ? graph_t_doc(c.source(), c.target(), u_to_T(c, o.tol))
                                : correspondence_doc(c);
  const std::string text = lagrangian_to_json(out) + "\n";
  if (o.output.empty()) {
    std::cout << text;
  } else {
    write_text_file(o.output, text);
  }
  return 0;
}

// --- index ---------------------------------------------------------------------

int run_index(const GlobalOpts& o, const std::string& input) {
  const PolarizedSpace p = load_polarized(input, o.tol);
  const Frame l = from_graph_isometry(p.ref(), o.tol);
  const IndexClass idx = sub_lagrangian_index(p.space(), l, o.tol);

  json report;
  report["command"] = "index";
  report["degree"] = idx.degree;
  report["field"] = field_name(idx.field);
  report["group"] = to_string(idx.group);
  report["value"] = idx.value;
  report["pass"] = true;
  emit(o, report);
  return 0;
}

// --- demo ----------------------------------------------------------------------

int run_demo_cylinder(const GlobalOpts& o, double l1, double l2, Index modes) {
  const CylinderDemoReport r = cylinder_demo(l1, l2, modes, o.tol);

  json report;
  report["command"] = "demo";
  report["demo"] = "cylinder";
  report["l1"] = r.l1;
  report["l2"] = r.l2;
  report["modes"] = r.n_max;
  report["glue"] = json{{"kind", to_string(r.glue.glued.kind)},
                        {"length", r.glue.glued.length},
                        {"symbol_exact", r.glue.symbol_exact},
                        {"dense_defect", r.glue.dense_defect},
                        {"middle_gap", r.glue.middle_gap},
                        {"used_fallback", r.glue.used_fallback}};
  report["type2_first"] = r.type2_first;
  report["type2_second"] = r.type2_second;
  report["type2_glued"] = r.type2_glued;
  report["lagrangian_residual"] = r.lagrangian_residual;
  report["ladder_modes"] = r.ladder_n;
  report["ladder_norm"] = r.ladder_norm;
  report["tolerance"] = kDemoTol;

  const bool pass = r.glue.symbol_exact && !r.glue.used_fallback &&
                    r.glue.dense_defect <= kDemoTol && r.lagrangian_residual <= kDemoTol &&
                    r.type2_first && r.type2_second && r.type2_glued;
  report["pass"] = pass;
  emit(o, report);
  return pass ? 0 : 1;
}

int run_demo_counterexample(const GlobalOpts& o, double alpha1, double alpha2, Index modes) {
  const std::vector<Index> ladder{modes, 2 * modes, 4 * modes};
  const CounterexampleReport r = counterexample_report(alpha1, alpha2, ladder, o.tol);

  json rows = json::array();
  for (const LadderRow& row : r.ladder) {
    rows.push_back(json{{"modes", row.n_max},
                        {"middle_sv", row.middle_sv},
                        {"dense_vs_symbol", row.dense_vs_symbol}});
  }

  json report;
  report["command"] = "demo";
  report["demo"] = "counterexample";
  report["alpha1"] = r.alpha1;
  report["alpha2"] = r.alpha2;
  report["status"] = to_string(r.status);
  report["product_tail"] = json::parse(tail_to_json(r.product));
  if (!r.diagnosis.empty()) report["diagnosis"] = r.diagnosis;
  report["ladder"] = rows;

  // Not closed: the truncation ladder must witness the vanishing middle
  // singular value (strict decay until it hits the numerical floor).
  // Closed: the dense truncations must match the symbol.
  bool pass = true;
  if (r.status == Closure::NotClosed) {
    for (std::size_t i = 1; i < r.ladder.size(); ++i) {
      pass = pass && (r.ladder[i].middle_sv < r.ladder[i - 1].middle_sv ||
                      r.ladder[i].middle_sv <= kSvFloor);
    }
  } else {
    for (const LadderRow& row : r.ladder) pass = pass && row.dense_vs_symbol <= kDemoTol;
  }
  report["pass"] = pass;
  emit(o, report);
  return pass ? 0 : 1;
}

// --- sweep ---------------------------------------------------------------------

std::uint64_t case_seed(std::uint64_t seed, int i) {
  // Distinct, order-independent per-case streams from the sweep seed.
  return seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(i + 1));
}

int run_sweep(const GlobalOpts& o, const std::string& what, std::uint64_t seed, int cases,
              int dims) {
  double max_residual = 0.0;
  double min_gap = std::numeric_limits<double>::infinity();
  int fallbacks = 0;
  json failures = json::array();

  for (int i = 0; i < cases; ++i) {
    Rng rng(case_seed(seed, i));
    const Field f = (i % 2 == 0) ? Field::Real : Field::Complex;
    const Index p = 1 + static_cast<Index>(rng.uniform() * dims);
    const Index q = 1 + static_cast<Index>(rng.uniform() * dims);
    const SuperSpace v(std::min<Index>(p, dims), std::min<Index>(q, dims), f);

    double residual = 0.0;
    if (what == "compose") {
      const Correspondence c01 = random_general_position(rng, v, v);
      const Correspondence c12 = random_general_position(rng, v, v);
      const ComposeResult rf = compose_formula(c01, c12, o.tol);
      const Correspondence rb = compose_bruteforce(c01, c12, o.tol);
      residual = subspace_distance(rf.corr.frame(), rb.frame());
      min_gap = std::min(min_gap, rf.gap);
      if (rf.used_fallback) ++fallbacks;
    } else {  // convert: u -> T -> u round trip in general position
      const Correspondence c = random_general_position(rng, v, v);
      const Matrix t = u_to_T(c, o.tol);
      const Correspondence c2 = T_to_u(v, v, t, o.tol);
      residual = subspace_distance(c.frame(), c2.frame());
      const Matrix t2 = u_to_T(c2, o.tol);
      residual = std::max(residual, hs_dist(t, t2) / std::max(1.0, hs_norm(t)));
    }

    max_residual = std::max(max_residual, residual);
    if (residual > kSweepTol) {
      failures.push_back(json{{"case", i}, {"residual", residual}});
    }
  }

  json report;
  report["command"] = "sweep";
  report["what"] = what;
  report["seed"] = seed;
  report["cases"] = cases;
  report["dims"] = dims;
  report["tolerance"] = kSweepTol;
  report["max_residual"] = max_residual;
  if (what == "compose") {
    report["min_gap"] = min_gap;
    report["fallbacks"] = fallbacks;
  }
  report["failures"] = failures;  // already ordered by case id
  const bool pass = failures.empty();
  report["pass"] = pass;
  emit(o, report);
  return pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian correspondences between polarized super Hilbert spaces"};
  app.require_subcommand(1);

  GlobalOpts o;
  if (const char* env = std::getenv("LAGCAT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !std::isfinite(v) || v <= 0.0) {
      std::cerr << "error: LAGCAT_TOL must be a positive number, got \"" << env << "\"\n";
      return 2;
    }
    o.tol.proj = v;
  }
  app.add_option("--tol", o.tol.proj,
                 "projection/isotropy tolerance (overrides the LAGCAT_TOL environment "
                 "variable)")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "write the report (or converted document) to a file");

  int rc = 0;

  // check
  std::string check_input;
  auto* cmd_check = app.add_subcommand(
      "check", "validate a Lagrangian/correspondence document and classify it");
  cmd_check->fallthrough();
  cmd_check->add_option("--input", check_input, "document to check")->required();
  cmd_check->callback([&] { rc = run_check(o, check_input); });

  // compose
  std::string left, right, method = "both", compose_out;
  auto* cmd_compose =
      app.add_subcommand("compose", "compose two correspondences (first leg = --left)");
  cmd_compose->fallthrough();
  cmd_compose->add_option("--left", left, "first correspondence document")->required();
  cmd_compose->add_option("--right", right, "second correspondence document")->required();
  cmd_compose->add_option("--method", method, "composition route")
      ->check(CLI::IsMember({"formula", "bruteforce", "both"}))
      ->capture_default_str();
  cmd_compose->add_option("--result", compose_out, "write the composite document to a file");
  cmd_compose->callback([&] { rc = run_compose(o, left, right, method, compose_out); });

  // cat-compose
  std::string p0_path, p1_path, p2_path, cat_left, cat_right, cat_out;
  double cat_threshold = 1e-6;
  auto* cmd_cat = app.add_subcommand(
      "cat-compose", "compose morphisms of polarized spaces and verify the predicted type");
  cmd_cat->fallthrough();
  cmd_cat->add_option("--p0", p0_path, "polarized source document")->required();
  cmd_cat->add_option("--p1", p1_path, "polarized middle document")->required();
  cmd_cat->add_option("--p2", p2_path, "polarized target document")->required();
  cmd_cat->add_option("--left", cat_left, "first morphism document")->required();
  cmd_cat->add_option("--right", cat_right, "second morphism document")->required();
  cmd_cat->add_option("--threshold", cat_threshold, "type classification threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_cat->add_option("--result", cat_out, "write the composite document to a file");
  cmd_cat->callback([&] {
    rc = run_cat_compose(o, p0_path, p1_path, p2_path, cat_left, cat_right, cat_threshold,
                         cat_out);
  });

  // classify
  std::string cls_p0, cls_p1, cls_input;
  double cls_threshold = 1e-6;
  auto* cmd_classify = app.add_subcommand(
      "classify", "classify a correspondence between polarized spaces by morphism type");
  cmd_classify->fallthrough();
  cmd_classify->add_option("--p0", cls_p0, "polarized source document")->required();
  cmd_classify->add_option("--p1", cls_p1, "polarized target document")->required();
  cmd_classify->add_option("--input", cls_input, "correspondence document")->required();
  cmd_classify->add_option("--threshold", cls_threshold, "type classification threshold")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_classify->callback([&] { rc = run_classify(o, cls_p0, cls_p1, cls_input, cls_threshold); });

  // convert
  std::string convert_mode, convert_input;
  auto* cmd_convert = app.add_subcommand(
      "convert", "convert between graph-unitary and graph-operator documents");
  cmd_convert->fallthrough();
  cmd_convert->add_option("--mode", convert_mode, "conversion direction")
      ->check(CLI::IsMember({"u-to-t", "t-to-u"}))
      ->required();
  cmd_convert->add_option("--input", convert_input, "correspondence document")->required();
  cmd_convert->callback([&] { rc = run_convert(o, convert_mode, convert_input); });

  // index
  std::string index_input;
  auto* cmd_index = app.add_subcommand(
      "index", "index class of the reference sub-Lagrangian of a polarized space");
  cmd_index->fallthrough();
  cmd_index->add_option("--input", index_input, "polarized space document")->required();
  cmd_index->callback([&] { rc = run_index(o, index_input); });

  // demo
  auto* cmd_demo = app.add_subcommand("demo", "built-in demonstrations");
  cmd_demo->require_subcommand(1);
  cmd_demo->fallthrough();

  double l1 = 0.5, l2 = 0.7;
  Index cyl_modes = 16;
  auto* cmd_cyl = cmd_demo->add_subcommand(
      "cylinder", "glue two spectral cylinders and cross-check the dense truncation");
  cmd_cyl->fallthrough();
  cmd_cyl->add_option("--l1", l1, "first cylinder length")->capture_default_str();
  cmd_cyl->add_option("--l2", l2, "second cylinder length")->capture_default_str();
  cmd_cyl->add_option("--modes", cyl_modes, "truncation size")
      ->check(CLI::Range(Index{1}, Index{256}))
      ->capture_default_str();
  cmd_cyl->callback([&] { rc = run_demo_cylinder(o, l1, l2, cyl_modes); });

  double alpha1 = 1.0, alpha2 = -1.0;
  Index cx_modes = 8;
  auto* cmd_cx = cmd_demo->add_subcommand(
      "counterexample", "compose two exponential-tail graphs and report closure");
  cmd_cx->fallthrough();
  cmd_cx->add_option("--alpha1", alpha1, "first decay rate")->capture_default_str();
  cmd_cx->add_option("--alpha2", alpha2, "second decay rate")->capture_default_str();
  cmd_cx->add_option("--modes", cx_modes, "base truncation size of the ladder")
      ->check(CLI::Range(Index{1}, Index{256}))
      ->capture_default_str();
  cmd_cx->callback([&] { rc = run_demo_counterexample(o, alpha1, alpha2, cx_modes); });

  // sweep
  std::string sweep_what = "compose";
  std::uint64_t sweep_seed = 1;
  int sweep_cases = 100, sweep_dims = 6;
  auto* cmd_sweep =
      app.add_subcommand("sweep", "randomized property sweep with a fixed seed");
  cmd_sweep->fallthrough();
  cmd_sweep->add_option("what", sweep_what, "property to sweep")
      ->check(CLI::IsMember({"compose", "convert"}))
      ->capture_default_str();
  cmd_sweep->add_option("--seed", sweep_seed, "sweep seed")->capture_default_str();
  cmd_sweep->add_option("--cases", sweep_cases, "number of cases")
      ->check(CLI::Range(1, 100000))
      ->capture_default_str();
  cmd_sweep->add_option("--dims", sweep_dims, "maximum half-space dimension")
      ->check(CLI::Range(1, 16))
      ->capture_default_str();
  cmd_sweep->callback([&] { rc = run_sweep(o, sweep_what, sweep_seed, sweep_cases, sweep_dims); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == Errc::parse_error ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
