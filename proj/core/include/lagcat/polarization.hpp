#pragma once

#include <optional>

#include "lagcat/composition.hpp"

namespace lagcat {

// A space together with a reference sub-Lagrangian (the polarization),
// stored in graph form w : V+ -> V-. When the space carries odd generators
// the reference subspace must be invariant under all of them.
class PolarizedSpace {
 public:
  explicit PolarizedSpace(GraphIsometry ref, const Tolerances& tol = {});
  PolarizedSpace(SuperSpace v, Matrix ref_w, const Tolerances& tol = {});

  const SuperSpace& space() const { return ref_.space(); }
  const GraphIsometry& ref() const { return ref_; }
  const Matrix& w() const { return ref_.u(); }

 private:
  GraphIsometry ref_;
};

// Distance between two closed isotropic subspaces of the same space in the
// graph encoding: ||u1 - u2||_F. Controls and is controlled by the projector
// distance: ||P1 - P2||_F <= 3 ||u1 - u2||_F and, for unitary graphs,
// ||u1 - u2||_F <= sqrt(2) ||P1 - P2||_F.
double hs_close(const GraphIsometry& a, const GraphIsometry& b);
bool close(const GraphIsometry& a, const GraphIsometry& b, double threshold);

enum class MorphismType { Type1, Type2, Both, Neither };

const char* to_string(MorphismType t);

// Deviations of a correspondence from the two admissible shapes relative to
// polarizations L0 = graph(w0), L1 = graph(w1):
//   type (1): u00 = u11 = 0 (within tol.proj) and u01 w1^H u10 close to w0^H;
//             such a correspondence is the graph of the unitary
//             T = [[u01^-1, 0], [0, u10]] : V0 -> V1 intertwining the
//             polarizations up to the same deviation.
//   type (2): u close to [[-w0^H, 0], [0, w1]], the correspondence induced by
//             the sub-Lagrangian L0 (+) Gamma L1 of Pi V0 (+) V1.
struct MorphismClass {
  MorphismType type = MorphismType::Neither;
  double offdiag_residual = 0.0;  // max(||u00||, ||u11||): the type (1) shape constraint
  double dev1 = 0.0;              // ||u01 w1^H u10 - w0^H||
  double dev2 = 0.0;              // max of the four block deviations from the type (2) shape
  std::optional<Matrix> graph_unitary;  // T for type (1) morphisms with invertible u01
};

MorphismClass classify_morphism(const PolarizedSpace& p0, const PolarizedSpace& p1,
                                const Correspondence& c, double threshold,
                                const Tolerances& tol = {});

// The type (2) reference morphism itself: graph unitary [[-w0^H, 0], [0, w1]].
// Defined when both references are Lagrangian (unitary w); not_unitary
// otherwise.
Correspondence reference_morphism(const PolarizedSpace& p0, const PolarizedSpace& p1,
                                  const Tolerances& tol = {});

// Composition in the category of polarized spaces: classify both inputs
// (not_a_morphism when either is Neither), compose, and verify the output
// lands in the predicted class: type (1) iff both inputs are type (1),
// type (2) otherwise; inputs classified as Both count as type (2) for the
// prediction, and an output classified Both always verifies.
struct CatComposeResult {
  ComposeResult composed;
  MorphismClass in1, in2, out;
  MorphismType predicted;
};
CatComposeResult compose_in_category(const PolarizedSpace& p0, const PolarizedSpace& p1,
                                     const PolarizedSpace& p2, const Correspondence& c01,
                                     const Correspondence& c12, double threshold,
                                     const Tolerances& tol = {});

// Parity-reversed polarized space (Pi V, Gamma L); requires a Lagrangian
// reference (the image of a proper sub-Lagrangian need not be a graph over
// the reversed plus part).
PolarizedSpace opposite_polarized(const PolarizedSpace& p, const Tolerances& tol = {});

// (V (+) V', L (+) L') in grading-sorted coordinates.
PolarizedSpace direct_sum_polarized(const PolarizedSpace& a, const PolarizedSpace& b,
                                    const Tolerances& tol = {});

}  // namespace lagcat
