#pragma once

#include <optional>
#include <string>

#include "lagcat/polarization.hpp"
#include "lagcat/sequence_model.hpp"

namespace lagcat {

// JSON text formats of the library's objects. Keys are emitted sorted and
// numbers in shortest round-trip form, so serialization is deterministic.
//
//   Matrix      {"rows": n, "cols": m, "field": "R"|"C",
//                "entries": [[re, im], ...]}            (row-major)
//   SuperSpace  {"dim_plus", "dim_minus", "field", "degree",
//                "generators": [Matrix, ...]}
//   Lagrangian  {"repr": "frame"|"graph_u"|"graph_T", "matrix": Matrix,
//                "space0": SuperSpace, "space1": SuperSpace?}
//   Polarized   {"space": SuperSpace, "ref": Matrix}    (the reference w)
//   StructuredOp {"N0": band, "core": Matrix,
//                "tail": {"kind": "exp"|"aps_exp"|"const"|"zero",
//                         "params": {...}}}
//
// Parsers throw Error{parse_error} on anything structurally malformed:
// missing or wrongly typed fields, unknown tags, non-finite numbers, or a
// Real-tagged matrix with a nonzero imaginary part. Violations of the
// mathematical invariants of a well-formed document (a non-unitary graph, a
// non-isometric frame, broken module relations) surface from the ordinary
// constructors with their own error codes.

std::string matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const std::string& text);

std::string super_space_to_json(const SuperSpace& v);
SuperSpace super_space_from_json(const std::string& text, const Tolerances& tol = {});

// One closed isotropic subspace: of a single space when space1 is absent, of
// Pi space0 (+) space1 (a correspondence) when present. repr fixes the
// meaning of the matrix:
//   "frame":   isometric columns spanning the subspace, in the sorted basis
//              of the space (or of the product space),
//   "graph_u": the (partial) isometry of the graph encoding,
//   "graph_T": the operator V0 -> V1 whose graph is the correspondence
//              (two-space documents only).
struct LagrangianDoc {
  std::string repr;
  Matrix matrix;
  SuperSpace space0;
  std::optional<SuperSpace> space1;
};

std::string lagrangian_to_json(const LagrangianDoc& doc);
LagrangianDoc lagrangian_from_json(const std::string& text, const Tolerances& tol = {});

LagrangianDoc frame_doc(const SuperSpace& v, const Frame& f);
LagrangianDoc graph_doc(const GraphIsometry& g);
LagrangianDoc correspondence_doc(const Correspondence& c);
LagrangianDoc graph_t_doc(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t);

// Materializers. Single-space documents yield frames / graph isometries;
// two-space documents yield correspondences (graph_T through the T -> u
// conversion, frames through graph recovery over the product space).
// Using a correspondence document where a plain subspace is required (or vice
// versa) is invalid_value.
bool is_correspondence_doc(const LagrangianDoc& doc);
Frame doc_to_frame(const LagrangianDoc& doc, const Tolerances& tol = {});
GraphIsometry doc_to_graph(const LagrangianDoc& doc, const Tolerances& tol = {});
Correspondence doc_to_correspondence(const LagrangianDoc& doc, const Tolerances& tol = {});

std::string polarized_to_json(const PolarizedSpace& p);
PolarizedSpace polarized_from_json(const std::string& text, const Tolerances& tol = {});

// Tail symbols canonicalize on parse exactly like the factories do (an "exp"
// with alpha = 0 comes back as "const", a vanishing amplitude as "zero").
std::string tail_to_json(const TailSymbol& t);
TailSymbol tail_from_json(const std::string& text);

std::string structured_op_to_json(const StructuredOp& op);
StructuredOp structured_op_from_json(const std::string& text);

}  // namespace lagcat
