#include "lagcat/polarization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lagcat {

const char* to_string(MorphismType t) {
  switch (t) {
    case MorphismType::Type1: return "type1";
    case MorphismType::Type2: return "type2";
    case MorphismType::Both: return "both";
    case MorphismType::Neither: return "neither";
  }
  return "unknown";
}

PolarizedSpace::PolarizedSpace(GraphIsometry ref, const Tolerances& tol)
    : ref_(std::move(ref)) {
  if (!ref_.space().generators().empty()) {
    // The reference subspace of a degree-d space must be a submodule.
    const double res = invariance_residual(ref_.space(), from_graph_isometry(ref_, tol));
    require(res <= tol.proj, Errc::not_invariant,
            "polarization is not invariant under the odd generators (residual " +
                std::to_string(res) + ")");
  }
}

PolarizedSpace::PolarizedSpace(SuperSpace v, Matrix ref_w, const Tolerances& tol)
    : PolarizedSpace(GraphIsometry(std::move(v), std::move(ref_w), tol), tol) {}

double hs_close(const GraphIsometry& a, const GraphIsometry& b) {
  require(a.space().same_signature(b.space()), Errc::space_mismatch,
          "closeness compares subspaces of the same space");
  return hs_dist(a.u(), b.u());
}

bool close(const GraphIsometry& a, const GraphIsometry& b, double threshold) {
  return hs_close(a, b) <= threshold;
}

MorphismClass classify_morphism(const PolarizedSpace& p0, const PolarizedSpace& p1,
                                const Correspondence& c, double threshold,
                                const Tolerances& tol) {
  require(c.source().same_signature(p0.space()) && c.target().same_signature(p1.space()),
          Errc::space_mismatch, "correspondence does not match the polarized spaces");
  const Matrix u00 = c.u00(), u01 = c.u01(), u10 = c.u10(), u11 = c.u11();
  const Matrix& w0 = p0.w();
  const Matrix& w1 = p1.w();

  MorphismClass out;
  out.offdiag_residual = std::max(hs_norm(u00), hs_norm(u11));
  out.dev1 = hs_norm(u01 * w1.adjoint() * u10 - w0.adjoint());
  out.dev2 = std::max({hs_norm(u00 + w0.adjoint()), hs_norm(u01), hs_norm(u10),
                       hs_norm(u11 - w1)});
  const bool is1 = out.offdiag_residual <= tol.proj && out.dev1 <= threshold;
  const bool is2 = out.dev2 <= threshold;
  out.type = is1 ? (is2 ? MorphismType::Both : MorphismType::Type1)
                 : (is2 ? MorphismType::Type2 : MorphismType::Neither);
  if (is1 && numerical_rank(u01, tol.rank_cutoff) == u01.rows() && u01.rows() == u01.cols()) {
    out.graph_unitary = assemble_blocks(
        generalized_inverse(u01, tol.rank_cutoff),
        Matrix::zero(u01.cols(), c.source().dim_minus(), u01.field),
        Matrix::zero(c.target().dim_minus(), u01.rows(), u01.field), u10);
  }
  return out;
}

Correspondence reference_morphism(const PolarizedSpace& p0, const PolarizedSpace& p1,
                                  const Tolerances& tol) {
  require(p0.ref().is_unitary(tol) && p1.ref().is_unitary(tol), Errc::not_unitary,
          "reference morphism needs Lagrangian polarizations");
  const Matrix& w0 = p0.w();
  const Matrix& w1 = p1.w();
  const Matrix u = assemble_blocks(-w0.adjoint(),
                                   Matrix::zero(w0.cols(), w1.cols(), w0.field),
                                   Matrix::zero(w1.rows(), w0.rows(), w0.field), w1);
  return Correspondence(p0.space(), p1.space(), u, tol);
}

CatComposeResult compose_in_category(const PolarizedSpace& p0, const PolarizedSpace& p1,
                                     const PolarizedSpace& p2, const Correspondence& c01,
                                     const Correspondence& c12, double threshold,
                                     const Tolerances& tol) {
  MorphismClass in1 = classify_morphism(p0, p1, c01, threshold, tol);
  MorphismClass in2 = classify_morphism(p1, p2, c12, threshold, tol);
  require(in1.type != MorphismType::Neither, Errc::not_a_morphism,
          "first factor is neither type (1) nor type (2) at this threshold");
  require(in2.type != MorphismType::Neither, Errc::not_a_morphism,
          "second factor is neither type (1) nor type (2) at this threshold");
  const bool pure1 =
      in1.type == MorphismType::Type1 && in2.type == MorphismType::Type1;
  const MorphismType predicted = pure1 ? MorphismType::Type1 : MorphismType::Type2;

  ComposeResult composed = compose_formula(c01, c12, tol);
  MorphismClass out = classify_morphism(p0, p2, composed.corr, threshold, tol);
  require(out.type == predicted || out.type == MorphismType::Both, Errc::not_a_morphism,
          std::string("composite is not of the predicted type (predicted ") +
              to_string(predicted) + ", classified " + to_string(out.type) + ")");
  return CatComposeResult{std::move(composed), std::move(in1), std::move(in2),
                          std::move(out), predicted};
}

PolarizedSpace opposite_polarized(const PolarizedSpace& p, const Tolerances& tol) {
  require(p.ref().is_unitary(tol), Errc::not_unitary,
          "opposite of a polarized space needs a Lagrangian reference");
  return PolarizedSpace(opposite(p.space()), -p.w().adjoint(), tol);
}

PolarizedSpace direct_sum_polarized(const PolarizedSpace& a, const PolarizedSpace& b,
                                    const Tolerances& tol) {
  DirectSum sum = direct_sum(a.space(), b.space());
  return PolarizedSpace(std::move(sum.space), block_diag(a.w(), b.w()), tol);
}

}  // namespace lagcat
