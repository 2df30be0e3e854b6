#include "lagcat/io.hpp"

#include <json.hpp>

#include <cmath>
#include <utility>

namespace lagcat {

namespace {

using nlohmann::json;

// All structural complaints funnel through here so every malformed document
// surfaces as parse_error, never as a bare nlohmann exception.
[[noreturn]] void bad(const std::string& what) { fail(Errc::parse_error, what); }

json parse_text(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) bad("input is not valid JSON");
  return j;
}

const json& field_of(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

double number_of(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) bad(where + " must be finite");
  return x;
}

Index index_of(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where + " must be an integer");
  const auto n = j.get<long long>();
  if (n < 0) bad(where + " must be non-negative");
  return static_cast<Index>(n);
}

Field field_tag_of(const json& j) {
  if (!j.is_string()) bad("\"field\" must be \"R\" or \"C\"");
  const std::string s = j.get<std::string>();
  if (s == "R") return Field::Real;
  if (s == "C") return Field::Complex;
  bad("\"field\" must be \"R\" or \"C\"");
}

json matrix_json(const Matrix& m) {
  json entries = json::array();
  for (Index r = 0; r < m.rows(); ++r)
    for (Index c = 0; c < m.cols(); ++c)
      entries.push_back(json::array({m.m(r, c).real(), m.m(r, c).imag()}));
  return json{{"rows", m.rows()},
              {"cols", m.cols()},
              {"field", to_string(m.field)},
              {"entries", std::move(entries)}};
}

Matrix matrix_of(const json& j) {
  const Index rows = index_of(field_of(j, "rows"), "\"rows\"");
  const Index cols = index_of(field_of(j, "cols"), "\"cols\"");
  const Field f = field_tag_of(field_of(j, "field"));
  const json& entries = field_of(j, "entries");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows * cols)
    bad("\"entries\" must hold rows*cols pairs");
  Dense m(rows, cols);
  Index i = 0;
  for (const json& e : entries) {
    if (!e.is_array() || e.size() != 2) bad("matrix entries must be [re, im] pairs");
    const double re = number_of(e[0], "matrix entry");
    const double im = number_of(e[1], "matrix entry");
    if (f == Field::Real && im != 0.0)
      bad("a Real-tagged matrix must have exactly zero imaginary parts");
    m(i / cols, i % cols) = Complex(re, im);
    ++i;
  }
  return Matrix(std::move(m), f);
}

json super_space_json(const SuperSpace& v) {
  json gens = json::array();
  for (const Matrix& g : v.generators()) gens.push_back(matrix_json(g));
  return json{{"dim_plus", v.dim_plus()},
              {"dim_minus", v.dim_minus()},
              {"field", to_string(v.field())},
              {"degree", v.degree()},
              {"generators", std::move(gens)}};
}

SuperSpace super_space_of(const json& j, const Tolerances& tol) {
  const Index p = index_of(field_of(j, "dim_plus"), "\"dim_plus\"");
  const Index q = index_of(field_of(j, "dim_minus"), "\"dim_minus\"");
  const Field f = field_tag_of(field_of(j, "field"));
  const Index d = index_of(field_of(j, "degree"), "\"degree\"");
  const json& gens = field_of(j, "generators");
  if (!gens.is_array()) bad("\"generators\" must be an array of matrices");
  std::vector<Matrix> generators;
  generators.reserve(gens.size());
  for (const json& g : gens) generators.push_back(matrix_of(g));
  return SuperSpace(p, q, f, static_cast<int>(d), std::move(generators), tol);
}

json tail_json(const TailSymbol& t) {
  json params = json::object();
  switch (t.kind) {
    case TailKind::Zero: break;
    case TailKind::Const: params["c"] = t.amplitude; break;
    case TailKind::Exp:
      params["c"] = t.amplitude;
      params["alpha"] = t.rate;
      break;
    case TailKind::ApsExp:
      params["c"] = t.amplitude;
      params["ell"] = t.rate;
      break;
  }
  return json{{"kind", to_string(t.kind)}, {"params", std::move(params)}};
}

TailSymbol tail_of(const json& j) {
  const json& kind = field_of(j, "kind");
  if (!kind.is_string()) bad("tail \"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  const json& params = field_of(j, "params");
  if (k == "zero") return TailSymbol::zero();
  if (k == "const") return TailSymbol::constant(number_of(field_of(params, "c"), "\"c\""));
  if (k == "exp")
    return TailSymbol::exponential(number_of(field_of(params, "c"), "\"c\""),
                                   number_of(field_of(params, "alpha"), "\"alpha\""));
  if (k == "aps_exp")
    return TailSymbol::aps_exponential(number_of(field_of(params, "c"), "\"c\""),
                                       number_of(field_of(params, "ell"), "\"ell\""));
  bad("tail \"kind\" must be one of zero/const/exp/aps_exp");
}

}  // namespace

std::string matrix_to_json(const Matrix& m) { return matrix_json(m).dump(); }

Matrix matrix_from_json(const std::string& text) { return matrix_of(parse_text(text)); }

std::string super_space_to_json(const SuperSpace& v) { return super_space_json(v).dump(); }

SuperSpace super_space_from_json(const std::string& text, const Tolerances& tol) {
  return super_space_of(parse_text(text), tol);
}

std::string lagrangian_to_json(const LagrangianDoc& doc) {
  json j{{"repr", doc.repr},
         {"matrix", matrix_json(doc.matrix)},
         {"space0", super_space_json(doc.space0)}};
  if (doc.space1) j["space1"] = super_space_json(*doc.space1);
  return j.dump();
}

LagrangianDoc lagrangian_from_json(const std::string& text, const Tolerances& tol) {
  const json j = parse_text(text);
  const json& repr = field_of(j, "repr");
  if (!repr.is_string()) bad("\"repr\" must be a string");
  LagrangianDoc doc{repr.get<std::string>(), matrix_of(field_of(j, "matrix")),
                    super_space_of(field_of(j, "space0"), tol), std::nullopt};
  if (doc.repr != "frame" && doc.repr != "graph_u" && doc.repr != "graph_T")
    bad("\"repr\" must be one of frame/graph_u/graph_T");
  if (j.contains("space1")) doc.space1 = super_space_of(j["space1"], tol);
  if (doc.repr == "graph_T" && !doc.space1)
    bad("\"graph_T\" documents need both spaces");
  return doc;
}

LagrangianDoc frame_doc(const SuperSpace& v, const Frame& f) {
  return LagrangianDoc{"frame", f.cols(), v, std::nullopt};
}

LagrangianDoc graph_doc(const GraphIsometry& g) {
  return LagrangianDoc{"graph_u", g.u(), g.space(), std::nullopt};
}

LagrangianDoc correspondence_doc(const Correspondence& c) {
  return LagrangianDoc{"graph_u", c.u(), c.source(), c.target()};
}

LagrangianDoc graph_t_doc(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t) {
  return LagrangianDoc{"graph_T", t, v0, v1};
}

bool is_correspondence_doc(const LagrangianDoc& doc) { return doc.space1.has_value(); }

Frame doc_to_frame(const LagrangianDoc& doc, const Tolerances& tol) {
  require(!is_correspondence_doc(doc), Errc::invalid_value,
          "document describes a correspondence, not a plain subspace");
  if (doc.repr == "frame") return Frame(doc.matrix, tol);
  return from_graph_isometry(GraphIsometry(doc.space0, doc.matrix, tol), tol);
}

GraphIsometry doc_to_graph(const LagrangianDoc& doc, const Tolerances& tol) {
  require(!is_correspondence_doc(doc), Errc::invalid_value,
          "document describes a correspondence, not a plain subspace");
  if (doc.repr == "frame")
    return to_graph_isometry(doc.space0, Frame(doc.matrix, tol), tol);
  return GraphIsometry(doc.space0, doc.matrix, tol);
}

Correspondence doc_to_correspondence(const LagrangianDoc& doc, const Tolerances& tol) {
  require(is_correspondence_doc(doc), Errc::invalid_value,
          "document describes a plain subspace, not a correspondence");
  if (doc.repr == "graph_u")
    return Correspondence(doc.space0, *doc.space1, doc.matrix, tol);
  if (doc.repr == "graph_T")
    return T_to_u(doc.space0, *doc.space1, doc.matrix, tol);
  const SuperSpace w = product_space(doc.space0, *doc.space1);
  const GraphIsometry g = to_graph_isometry(w, Frame(doc.matrix, tol), tol);
  return Correspondence(doc.space0, *doc.space1, g.u(), tol);
}

std::string polarized_to_json(const PolarizedSpace& p) {
  return json{{"space", super_space_json(p.space())}, {"ref", matrix_json(p.w())}}.dump();
}

PolarizedSpace polarized_from_json(const std::string& text, const Tolerances& tol) {
  const json j = parse_text(text);
  SuperSpace v = super_space_of(field_of(j, "space"), tol);
  Matrix w = matrix_of(field_of(j, "ref"));
  return PolarizedSpace(std::move(v), std::move(w), tol);
}

std::string tail_to_json(const TailSymbol& t) { return tail_json(t).dump(); }

TailSymbol tail_from_json(const std::string& text) { return tail_of(parse_text(text)); }

std::string structured_op_to_json(const StructuredOp& op) {
  return json{{"N0", op.band}, {"core", matrix_json(op.core)}, {"tail", tail_json(op.tail)}}
      .dump();
}

StructuredOp structured_op_from_json(const std::string& text) {
  const json j = parse_text(text);
  const Index band = index_of(field_of(j, "N0"), "\"N0\"");
  Matrix core = matrix_of(field_of(j, "core"));
  TailSymbol tail = tail_of(field_of(j, "tail"));
  return StructuredOp(band, std::move(core), std::move(tail));
}

}  // namespace lagcat
