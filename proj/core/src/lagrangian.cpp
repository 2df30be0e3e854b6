#include "lagcat/lagrangian.hpp"

#include <cmath>
#include <string>

namespace lagcat {

GraphIsometry::GraphIsometry(SuperSpace v, Matrix u, const Tolerances& tol)
    : space_(std::move(v)), u_(std::move(u)) {
  require(u_.rows() == space_.dim_minus() && u_.cols() == space_.dim_plus(),
          Errc::dimension_mismatch, "graph isometry must map V+ to V-");
  require(u_.field == space_.field(), Errc::field_mismatch,
          "graph isometry field does not match the space");
  const double res = hs_norm(u_ * u_.adjoint() * u_ - u_);
  require(res <= tol.ortho * std::max(1.0, hs_norm(u_)), Errc::not_partial_isometry,
          "u u^H u != u (residual " + std::to_string(res) + ")");
  rank_ = numerical_rank(u_, tol.rank_cutoff);
}

bool GraphIsometry::is_unitary(const Tolerances& tol) const {
  if (u_.rows() != u_.cols()) return false;
  const Matrix id = Matrix::identity(u_.cols(), u_.field);
  return hs_norm(u_.adjoint() * u_ - id) <= tol.proj;
}

double isotropy_residual(const SuperSpace& v, const Frame& f) {
  return hs_norm(b_gram(v, f.cols()));
}

bool is_isotropic(const SuperSpace& v, const Frame& f, const Tolerances& tol) {
  return isotropy_residual(v, f) <= tol.proj;
}

Classification classify(const SuperSpace& v, const Frame& f, const Tolerances& tol) {
  const double res = isotropy_residual(v, f);
  require(res <= tol.proj, Errc::not_isotropic,
          "subspace is not B-isotropic (residual " + std::to_string(res) + ")");
  const Matrix gf = v.gamma() * f.cols();
  const Index span_rank = numerical_rank(hcat(f.cols(), gf), tol.rank_cutoff);
  const Index codim = v.dim() - span_rank;
  return Classification{codim == 0 ? LagKind::Lagrangian : LagKind::SubLagrangian, f.dim(),
                        codim};
}

GraphIsometry to_graph_isometry(const SuperSpace& v, const Frame& f, const Tolerances& tol) {
  const double res = isotropy_residual(v, f);
  require(res <= tol.proj, Errc::not_isotropic,
          "subspace is not B-isotropic (residual " + std::to_string(res) + ")");
  const Matrix a = f.cols().block(0, 0, v.dim_plus(), f.dim());
  const Matrix b = f.cols().block(v.dim_plus(), 0, v.dim_minus(), f.dim());
  const Matrix u = b * generalized_inverse(a, tol.rank_cutoff);
  return GraphIsometry(v, u, tol);
}

Frame from_graph_isometry(const GraphIsometry& g, const Tolerances& tol) {
  const SvdResult s = svd(g.u());
  const Index r = rank_from(s.sigma, tol.rank_cutoff);
  const Matrix basis = s.V.block(0, 0, g.space().dim_plus(), r);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return Frame(inv_sqrt2 * vcat(basis, g.u() * basis));
}

GraphIsometry gamma_image(const GraphIsometry& g) {
  return GraphIsometry(g.space(), -g.u());
}

Frame gamma_image(const SuperSpace& v, const Frame& f) {
  require(f.ambient() == v.dim(), Errc::dimension_mismatch,
          "gamma_image: frame does not live in the space");
  return Frame(v.gamma() * f.cols());
}

Frame defect_space(const SuperSpace& v, const Frame& f, const Tolerances& tol) {
  const Frame span = span_union(f, gamma_image(v, f), tol.rank_cutoff);
  return complement(span);
}

Matrix projection_formula(const GraphIsometry& g) {
  const Matrix& u = g.u();
  return 0.5 * assemble_blocks(u.adjoint() * u, u.adjoint(), u, u * u.adjoint());
}

}  // namespace lagcat
