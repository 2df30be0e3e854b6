#include "lagcat/composition.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace lagcat {

namespace {

// Offsets of the coordinate blocks [x0-, x1+, x0+, x1-] of Pi V0 (+) V1.
struct ProductLayout {
  Index q0, p1, p0, q1;
  Index x0m() const { return 0; }
  Index x1p() const { return q0; }
  Index x0p() const { return q0 + p1; }
  Index x1m() const { return q0 + p1 + p0; }
};

ProductLayout layout(const SuperSpace& v0, const SuperSpace& v1) {
  return ProductLayout{v0.dim_minus(), v1.dim_plus(), v0.dim_plus(), v1.dim_minus()};
}

}  // namespace

SuperSpace product_space(const SuperSpace& v0, const SuperSpace& v1) {
  const Field f = common_field(v0.field(), v1.field());
  return SuperSpace(v0.dim_minus() + v1.dim_plus(), v0.dim_plus() + v1.dim_minus(), f);
}

Matrix corr_embed0(const SuperSpace& v0, const SuperSpace& v1) {
  const ProductLayout l = layout(v0, v1);
  const Index n = v0.dim() + v1.dim();
  Dense e = Dense::Zero(n, v0.dim());
  for (Index i = 0; i < l.p0; ++i) e(l.x0p() + i, i) = 1.0;
  for (Index i = 0; i < l.q0; ++i) e(l.x0m() + i, l.p0 + i) = 1.0;
  return Matrix(std::move(e), common_field(v0.field(), v1.field()));
}

Matrix corr_embed1(const SuperSpace& v0, const SuperSpace& v1) {
  const ProductLayout l = layout(v0, v1);
  const Index n = v0.dim() + v1.dim();
  Dense e = Dense::Zero(n, v1.dim());
  for (Index i = 0; i < l.p1; ++i) e(l.x1p() + i, i) = 1.0;
  for (Index i = 0; i < l.q1; ++i) e(l.x1m() + i, l.p1 + i) = 1.0;
  return Matrix(std::move(e), common_field(v0.field(), v1.field()));
}

Correspondence::Correspondence(SuperSpace v0, SuperSpace v1, Matrix u, const Tolerances& tol)
    : v0_(std::move(v0)), v1_(std::move(v1)), u_(std::move(u)) {
  common_field(v0_.field(), v1_.field());
  require(u_.field == v0_.field(), Errc::field_mismatch,
          "correspondence field does not match its spaces");
  const Index out = v0_.dim_plus() + v1_.dim_minus();
  const Index in = v0_.dim_minus() + v1_.dim_plus();
  require(u_.rows() == out && u_.cols() == in, Errc::dimension_mismatch,
          "graph unitary must map V0- (+) V1+ to V0+ (+) V1-");
  require(out == in, Errc::dimension_mismatch,
          "no Lagrangian correspondence exists between spaces whose signature excesses "
          "dim V+ - dim V- differ");
  const double res = hs_norm(u_.adjoint() * u_ - Matrix::identity(in, u_.field));
  require(res <= tol.ortho, Errc::not_unitary,
          "graph matrix is not unitary (residual " + std::to_string(res) + ")");
}

Matrix Correspondence::u00() const {
  return u_.block(0, 0, v0_.dim_plus(), v0_.dim_minus());
}
Matrix Correspondence::u01() const {
  return u_.block(0, v0_.dim_minus(), v0_.dim_plus(), v1_.dim_plus());
}
Matrix Correspondence::u10() const {
  return u_.block(v0_.dim_plus(), 0, v1_.dim_minus(), v0_.dim_minus());
}
Matrix Correspondence::u11() const {
  return u_.block(v0_.dim_plus(), v0_.dim_minus(), v1_.dim_minus(), v1_.dim_plus());
}

Frame Correspondence::frame() const {
  const Index k = u_.cols();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return Frame(inv_sqrt2 * vcat(Matrix::identity(k, u_.field), u_));
}

GraphIsometry Correspondence::graph_isometry(const Tolerances& tol) const {
  return GraphIsometry(product_space(v0_, v1_), u_, tol);
}

bool general_position(const Correspondence& c, double margin) {
  const SuperSpace& v0 = c.source();
  const SuperSpace& v1 = c.target();
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Field f = c.u().field;
  const Matrix m0 = inv_sqrt2 * assemble_blocks(Matrix::identity(v0.dim_minus(), f),
                                                Matrix::zero(v0.dim_minus(), v1.dim_plus(), f),
                                                c.u00(), c.u01());
  const Matrix m1 = inv_sqrt2 * assemble_blocks(Matrix::zero(v1.dim_plus(), v0.dim_minus(), f),
                                                Matrix::identity(v1.dim_plus(), f), c.u10(),
                                                c.u11());
  return sv_max(m0) < 1.0 - margin && sv_max(m1) < 1.0 - margin;
}

namespace {

Matrix checked_inverse(const Matrix& a, const Tolerances& tol, const char* what) {
  require(a.rows() == a.cols(), Errc::singular_block,
          std::string(what) + ": block is not square");
  if (a.rows() == 0) return a;
  const auto sigma = svd(a).sigma;
  require(sigma.minCoeff() > rank_cutoff_abs(sigma, tol.rank_cutoff), Errc::singular_block,
          std::string(what) + ": block is numerically singular");
  return generalized_inverse(a, tol.rank_cutoff);
}

}  // namespace

Matrix u_to_T(const Correspondence& c, const Tolerances& tol) {
  const Matrix inv01 = checked_inverse(c.u01(), tol, "u_to_T: u01");
  const Matrix u00 = c.u00(), u10 = c.u10(), u11 = c.u11();
  return assemble_blocks(inv01, -(inv01 * u00), u11 * inv01, u10 - u11 * inv01 * u00);
}

double lagrangian_graph_residual(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t) {
  require(t.rows() == v1.dim() && t.cols() == v0.dim(), Errc::dimension_mismatch,
          "graph matrix shape does not match the spaces");
  return hs_norm(t.adjoint() * (v1.gamma() * t) - v0.gamma());
}

bool is_lagrangian_graph(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t,
                         const Tolerances& tol) {
  if (v0.dim() != v1.dim()) return false;
  const double res = lagrangian_graph_residual(v0, v1, t);
  const auto sigma = svd(t).sigma;
  if (sigma.size() > 0 && sigma.minCoeff() <= rank_cutoff_abs(sigma, tol.rank_cutoff))
    return false;  // a Lagrangian graph map is necessarily invertible
  const double scale =
      sigma.size() == 0 ? 1.0 : std::max(1.0, sigma.maxCoeff() / sigma.minCoeff());
  return res <= tol.proj * scale;
}

Correspondence T_to_u(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t,
                      const Tolerances& tol) {
  require(is_lagrangian_graph(v0, v1, t, tol), Errc::not_isotropic,
          "graph of T is not a Lagrangian correspondence");
  const Index p0 = v0.dim_plus(), q0 = v0.dim_minus();
  const Index p1 = v1.dim_plus(), q1 = v1.dim_minus();
  const Matrix tpp = t.block(0, 0, p1, p0);
  const Matrix tpm = t.block(0, p0, p1, q0);
  const Matrix tmp = t.block(p1, 0, q1, p0);
  const Matrix tmm = t.block(p1, p0, q1, q0);
  const Matrix inv = checked_inverse(tpp, tol, "T_to_u: T++");
  const Matrix u = assemble_blocks(-(inv * tpm), inv, tmm - tmp * inv * tpm, tmp * inv);
  Tolerances lenient = tol;
  lenient.ortho = std::max(tol.ortho, tol.proj);
  return Correspondence(v0, v1, u, lenient);
}

Frame compose_subspaces(const SuperSpace& v0, const SuperSpace& v1, const SuperSpace& v2,
                        const Frame& f01, const Frame& f12, const Tolerances& tol) {
  const ProductLayout l01 = layout(v0, v1);
  const ProductLayout l12 = layout(v1, v2);
  require(f01.ambient() == v0.dim() + v1.dim(), Errc::dimension_mismatch,
          "first frame does not live in Pi V0 (+) V1");
  require(f12.ambient() == v1.dim() + v2.dim(), Errc::dimension_mismatch,
          "second frame does not live in Pi V1 (+) V2");
  common_field(common_field(f01.field(), f12.field()), v1.field());

  // Middle blocks [x1+; x1-] of each frame, then kernel of the matching map.
  const Matrix mid1 = vcat(f01.cols().block(l01.x1p(), 0, l01.p1, f01.dim()),
                           f01.cols().block(l01.x1m(), 0, l01.q1, f01.dim()));
  const Matrix mid2 = vcat(f12.cols().block(l12.x0p(), 0, l12.p0, f12.dim()),
                           f12.cols().block(l12.x0m(), 0, l12.q0, f12.dim()));
  const Frame ker = null_space(hcat(mid1, -mid2), tol.rank_cutoff);
  const Matrix s1 = f01.cols() * ker.cols().block(0, 0, f01.dim(), ker.dim());
  const Matrix s2 = f12.cols() * ker.cols().block(f01.dim(), 0, f12.dim(), ker.dim());

  const Matrix x0m = s1.block(l01.x0m(), 0, l01.q0, ker.dim());
  const Matrix x0p = s1.block(l01.x0p(), 0, l01.p0, ker.dim());
  const Matrix x2p = s2.block(l12.x1p(), 0, l12.p1, ker.dim());
  const Matrix x2m = s2.block(l12.x1m(), 0, l12.q1, ker.dim());
  const Matrix stacked = vcat(vcat(x0m, x2p), vcat(x0p, x2m));
  return orthonormalize(stacked, tol.rank_cutoff);
}

Correspondence compose_bruteforce(const Correspondence& c01, const Correspondence& c12,
                                  const Tolerances& tol) {
  require(c01.target().same_signature(c12.source()), Errc::space_mismatch,
          "compose: middle spaces do not match");
  const SuperSpace& v0 = c01.source();
  const SuperSpace& v1 = c01.target();
  const SuperSpace& v2 = c12.target();
  const Frame f02 = compose_subspaces(v0, v1, v2, c01.frame(), c12.frame(), tol);
  const SuperSpace w02 = product_space(v0, v2);
  const GraphIsometry g = to_graph_isometry(w02, f02, tol);
  const Matrix& w = g.u();
  require(w.rows() == w.cols(), Errc::not_unitary_result,
          "composite subspace is not the graph of a square matrix");
  const double res = hs_norm(w.adjoint() * w - Matrix::identity(w.cols(), w.field));
  require(res <= tol.proj, Errc::not_unitary_result,
          "composite subspace is not Lagrangian (unitarity residual " + std::to_string(res) +
              ")");
  Tolerances lenient = tol;
  lenient.ortho = std::max(tol.ortho, tol.proj);
  return Correspondence(v0, v2, w, lenient);
}

ComposeResult compose_formula(const Correspondence& c01, const Correspondence& c12,
                              const Tolerances& tol) {
  require(c01.target().same_signature(c12.source()), Errc::space_mismatch,
          "compose: middle spaces do not match");
  const SuperSpace& v0 = c01.source();
  const SuperSpace& v2 = c12.target();
  const Matrix u00 = c01.u00(), u01 = c01.u01(), u10 = c01.u10(), u11 = c01.u11();
  const Matrix v11 = c12.u00(), v12 = c12.u01(), v21 = c12.u10(), v22 = c12.u11();

  const Matrix gap_p = Matrix::identity(u11.cols(), u11.field) - v11 * u11;
  const auto sigma = svd(gap_p).sigma;
  const double cut = rank_cutoff_abs(sigma, tol.rank_cutoff);
  double gap = 0.0;
  bool gap_ok = true;
  for (Index i = 0; i < sigma.size(); ++i) {
    if (sigma[i] <= cut) continue;
    gap = (gap == 0.0) ? sigma[i] : std::min(gap, sigma[i]);
    if (sigma[i] <= 10.0 * cut) gap_ok = false;
  }
  if (!gap_ok) {
    Correspondence byforce = compose_bruteforce(c01, c12, tol);
    const Matrix& w = byforce.u();
    const double res = hs_norm(w.adjoint() * w - Matrix::identity(w.cols(), w.field));
    return ComposeResult{std::move(byforce), true, gap, res,
                         "spectral gap of 1 - v11 u11 is within a factor 10 of the rank "
                         "cutoff; composed by the subspace route instead"};
  }

  const Matrix x = generalized_inverse(gap_p, tol.rank_cutoff);
  const Matrix gap_m = Matrix::identity(u11.rows(), u11.field) - u11 * v11;
  const Matrix y = generalized_inverse(gap_m, tol.rank_cutoff);
  const Matrix w =
      assemble_blocks(u00 + u01 * x * v11 * u10, u01 * x * v12, v21 * y * u10,
                      v22 + v21 * y * u11 * v12);
  const double res = hs_norm(w.adjoint() * w - Matrix::identity(w.cols(), w.field));
  require(res <= tol.proj, Errc::not_unitary_result,
          "block-formula composite is not unitary (residual " + std::to_string(res) + ")");
  Tolerances lenient = tol;
  lenient.ortho = std::max(tol.ortho, tol.proj);
  return ComposeResult{Correspondence(v0, v2, w, lenient), false, gap, res, ""};
}

KernelInclusionReport check_kernel_inclusions(const Correspondence& c01,
                                              const Correspondence& c12,
                                              const Tolerances& tol) {
  require(c01.target().same_signature(c12.source()), Errc::space_mismatch,
          "kernel inclusions: middle spaces do not match");
  const Matrix u01 = c01.u01(), u10 = c01.u10(), u11 = c01.u11();
  const Matrix v11 = c12.u00(), v12 = c12.u01(), v21 = c12.u10();

  const Matrix gap_p = Matrix::identity(u11.cols(), u11.field) - v11 * u11;
  const Matrix gap_m = Matrix::identity(u11.rows(), u11.field) - u11 * v11;
  const Frame kp = null_space(gap_p, tol.rank_cutoff);
  const Frame km = null_space(gap_m, tol.rank_cutoff);

  double worst = 0.0;
  auto track = [&worst](const Matrix& m) { worst = std::max(worst, hs_norm(m)); };
  track(u01 * kp.cols());                       // ker(1 - v11 u11) killed by u01
  track(v21 * (u11 * kp.cols()));               // and by v21 u11
  track(kp.cols().adjoint() * v12);             // orthogonal to ran(v12)
  track(kp.cols().adjoint() * (v11 * u10));     // and to ran(v11 u10)
  track((u01 * v11) * km.cols());               // ker(1 - u11 v11) killed by u01 v11
  track(v21 * km.cols());                       // and by v21
  track(km.cols().adjoint() * u10);             // orthogonal to ran(u10)
  track(km.cols().adjoint() * (u11 * v12));     // and to ran(u11 v12)
  return KernelInclusionReport{worst, kp.dim(), km.dim()};
}

Correspondence rotation_correspondence(double alpha, Field f) {
  Dense u(2, 2);
  u << std::cos(alpha), -std::sin(alpha), std::sin(alpha), std::cos(alpha);
  return Correspondence(SuperSpace(1, 1, f), SuperSpace(1, 1, f), Matrix(std::move(u), f));
}

}  // namespace lagcat
