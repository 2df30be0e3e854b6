#include "lagcat/random.hpp"

#include <cmath>

namespace lagcat {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double Rng::uniform() {
  return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // in (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(kTwoPi * u2);
  have_spare_ = true;
  return r * std::cos(kTwoPi * u2);
}

Complex Rng::scalar(Field f) {
  if (f == Field::Real) return Complex(gaussian(), 0.0);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re * inv_sqrt2, im * inv_sqrt2);
}

Matrix gaussian_matrix(Rng& rng, Index rows, Index cols, Field f) {
  Dense m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) m(i, j) = rng.scalar(f);
  return Matrix(std::move(m), f);
}

Matrix haar_unitary(Rng& rng, Index n, Field f) {
  if (n == 0) return Matrix::identity(0, f);
  const Matrix g = gaussian_matrix(rng, n, n, f);
  auto fix_phases = [n](auto q, const auto& r) {
    for (Index i = 0; i < n; ++i) {
      const auto d = r(i, i);
      if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
    }
    return q;
  };
  if (f == Field::Real) {
    Eigen::HouseholderQR<DenseReal> qr(g.m.real().eval());
    DenseReal q = qr.householderQ() * DenseReal::Identity(n, n);
    DenseReal r = qr.matrixQR().template triangularView<Eigen::Upper>();
    return Matrix::from_real(fix_phases(std::move(q), r));
  }
  Eigen::HouseholderQR<Dense> qr(g.m);
  Dense q = qr.householderQ() * Dense::Identity(n, n);
  Dense r = qr.matrixQR().template triangularView<Eigen::Upper>();
  return Matrix::from_complex(fix_phases(std::move(q), r));
}

GraphIsometry random_partial_isometry(Rng& rng, const SuperSpace& v, Index rank,
                                      const Tolerances& tol) {
  require(rank >= 0 && rank <= std::min(v.dim_plus(), v.dim_minus()), Errc::invalid_value,
          "partial isometry rank exceeds min(dim V+, dim V-)");
  const Matrix wp = haar_unitary(rng, v.dim_plus(), v.field());
  const Matrix wm = haar_unitary(rng, v.dim_minus(), v.field());
  const Matrix u = wm.block(0, 0, v.dim_minus(), rank) *
                   wp.block(0, 0, v.dim_plus(), rank).adjoint();
  return GraphIsometry(v, u, tol);
}

Frame random_isotropic(Rng& rng, const SuperSpace& v, Index k, const Tolerances& tol) {
  return from_graph_isometry(random_partial_isometry(rng, v, k, tol), tol);
}

Correspondence random_correspondence(Rng& rng, const SuperSpace& v0, const SuperSpace& v1,
                                     const Tolerances& tol) {
  const Index in = v0.dim_minus() + v1.dim_plus();
  const Index out = v0.dim_plus() + v1.dim_minus();
  require(in == out, Errc::dimension_mismatch,
          "no Lagrangian correspondence exists between these signatures");
  Tolerances lenient = tol;
  lenient.ortho = std::max(tol.ortho, 1e-12 * static_cast<double>(in + 1));
  return Correspondence(v0, v1, haar_unitary(rng, in, common_field(v0.field(), v1.field())),
                        lenient);
}

Correspondence random_general_position(Rng& rng, const SuperSpace& v0, const SuperSpace& v1,
                                       double min_block_sv, int max_tries,
                                       const Tolerances& tol) {
  require(v0.dim_plus() == v1.dim_plus() && v0.dim_minus() == v1.dim_minus(),
          Errc::dimension_mismatch,
          "general-position sampling needs matching graded dimensions");
  for (int t = 0; t < max_tries; ++t) {
    Correspondence c = random_correspondence(rng, v0, v1, tol);
    const Matrix u01 = c.u01();
    const Matrix u10 = c.u10();
    const double s01 = u01.rows() == 0 ? 1.0 : sv_min(u01);
    const double s10 = u10.rows() == 0 ? 1.0 : sv_min(u10);
    if (s01 >= min_block_sv && s10 >= min_block_sv) return c;
  }
  fail(Errc::non_convergence, "no general-position sample within the retry budget");
}

namespace {

// Unitary close to the identity: Cayley transform of a normalized random
// skew-Hermitian matrix scaled by eps (exactly unitary, ||E - I|| = O(eps)).
Matrix near_identity_unitary(Rng& rng, Index n, Field f, double eps,
                             const Tolerances& tol) {
  if (n == 0) return Matrix::identity(0, f);
  const Matrix g = gaussian_matrix(rng, n, n, f);
  Matrix s = 0.5 * (g - g.adjoint());
  const double norm = hs_norm(s);
  if (norm == 0.0) return Matrix::identity(n, f);
  s = (eps / (2.0 * norm)) * s;
  const Matrix id = Matrix::identity(n, f);
  return inverse(id - s, tol.rank_cutoff) * (id + s);
}

}  // namespace

Correspondence random_type1(Rng& rng, const PolarizedSpace& p0, const PolarizedSpace& p1,
                            const Tolerances& tol) {
  require(p0.ref().is_unitary(tol) && p1.ref().is_unitary(tol), Errc::not_unitary,
          "type (1) sampling needs Lagrangian polarizations");
  require(p0.space().dim_plus() == p1.space().dim_plus(), Errc::dimension_mismatch,
          "type (1) morphisms need dim V0+ == dim V1+");
  const Field f = common_field(p0.space().field(), p1.space().field());
  const Matrix a = haar_unitary(rng, p0.space().dim_plus(), f);
  const Matrix u = assemble_blocks(
      Matrix::zero(p0.space().dim_plus(), p0.space().dim_minus(), f), a,
      p1.w() * a.adjoint() * p0.w().adjoint(),
      Matrix::zero(p1.space().dim_minus(), p1.space().dim_plus(), f));
  Tolerances lenient = tol;
  lenient.ortho = std::max(tol.ortho, 1e-12 * static_cast<double>(u.rows() + 1));
  return Correspondence(p0.space(), p1.space(), u, lenient);
}

Correspondence random_type2(Rng& rng, const PolarizedSpace& p0, const PolarizedSpace& p1,
                            double eps, const Tolerances& tol) {
  Correspondence ref = reference_morphism(p0, p1, tol);
  const Index n = ref.u().rows();
  const Field f = ref.u().field;
  const Matrix left = near_identity_unitary(rng, n, f, eps, tol);
  const Matrix right = near_identity_unitary(rng, n, f, eps, tol);
  Tolerances lenient = tol;
  lenient.ortho = std::max(tol.ortho, 1e-10 * static_cast<double>(n + 1));
  return Correspondence(p0.space(), p1.space(), left * ref.u() * right, lenient);
}

}  // namespace lagcat
