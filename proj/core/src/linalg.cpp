#include "lagcat/linalg.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <algorithm>

namespace lagcat {

SvdResult svd(const Matrix& a) {
  const Index r = a.rows(), c = a.cols();
  if (r == 0 || c == 0) {
    return SvdResult{Matrix::identity(r, a.field), RealVector::Zero(0),
                     Matrix::identity(c, a.field)};
  }
  if (a.field == Field::Real) {
    Eigen::JacobiSVD<DenseReal> s(a.m.real(), Eigen::ComputeFullU | Eigen::ComputeFullV);
    return SvdResult{Matrix::from_real(s.matrixU()), s.singularValues(),
                     Matrix::from_real(s.matrixV())};
  }
  Eigen::JacobiSVD<Dense> s(a.m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return SvdResult{Matrix::from_complex(s.matrixU()), s.singularValues(),
                   Matrix::from_complex(s.matrixV())};
}

double rank_cutoff_abs(const RealVector& sigma, double rel) {
  return sigma.size() == 0 ? 0.0 : rel * sigma.maxCoeff();
}

Index rank_from(const RealVector& sigma, double rel) {
  const double cut = rank_cutoff_abs(sigma, rel);
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma[i] > cut) ++r;
  return r;
}

Index numerical_rank(const Matrix& a, double rel) { return rank_from(svd(a).sigma, rel); }

double sv_max(const Matrix& a) {
  auto s = svd(a).sigma;
  return s.size() == 0 ? 0.0 : s.maxCoeff();
}

double sv_min(const Matrix& a) {
  auto s = svd(a).sigma;
  return s.size() == 0 ? 0.0 : s.minCoeff();
}

double smallest_nonzero_sv(const Matrix& a, double rel) {
  auto s = svd(a).sigma;
  const double cut = rank_cutoff_abs(s, rel);
  double best = 0.0;
  for (Index i = 0; i < s.size(); ++i)
    if (s[i] > cut) best = (best == 0.0) ? s[i] : std::min(best, s[i]);
  return best;
}

double cond(const Matrix& a, double rel) {
  require(a.rows() == a.cols(), Errc::dimension_mismatch, "cond: matrix not square");
  if (a.rows() == 0) return 1.0;
  auto s = svd(a).sigma;
  require(s.minCoeff() > rank_cutoff_abs(s, rel), Errc::singular,
          "cond: matrix numerically singular");
  return s.maxCoeff() / s.minCoeff();
}

Matrix generalized_inverse(const Matrix& a, double rel) {
  SvdResult s = svd(a);
  const double cut = rank_cutoff_abs(s.sigma, rel);
  Dense x = Dense::Zero(a.cols(), a.rows());
  for (Index i = 0; i < s.sigma.size(); ++i) {
    if (s.sigma[i] > cut) x += (1.0 / s.sigma[i]) * s.V.m.col(i) * s.U.m.col(i).adjoint();
  }
  return Matrix(std::move(x), a.field);
}

Matrix inverse(const Matrix& a, double rel) {
  require(a.rows() == a.cols(), Errc::dimension_mismatch, "inverse: matrix not square");
  if (a.rows() == 0) return a;
  auto s = svd(a).sigma;
  require(s.minCoeff() > rank_cutoff_abs(s, rel), Errc::singular,
          "inverse: matrix numerically singular");
  return generalized_inverse(a, rel);
}

Frame::Frame(Matrix cols, const Tolerances& tol) : cols_(std::move(cols)) {
  const Matrix gram = cols_.adjoint() * cols_;
  const double res = hs_dist(gram, Matrix::identity(cols_.cols(), cols_.field));
  require(res <= tol.ortho, Errc::not_partial_isometry,
          "frame columns are not orthonormal (residual " + std::to_string(res) + ")");
}

Frame Frame::zero_subspace(Index ambient, Field f) {
  return Frame(Matrix::zero(ambient, 0, f));
}

Frame orthonormalize(const Matrix& a, double rel) {
  SvdResult s = svd(a);
  const Index r = rank_from(s.sigma, rel);
  return Frame(s.U.block(0, 0, a.rows(), r));
}

Matrix projection_onto(const Frame& f) { return f.cols() * f.cols().adjoint(); }

Matrix projection_via_qr(const Matrix& a, double rel) {
  if (a.cols() == 0 || a.rows() == 0) return Matrix::zero(a.rows(), a.rows(), a.field);
  auto project = [&](const auto& qr, auto dense_identity) {
    const auto& r = qr.matrixR();
    const double cut = rel * std::abs(r(0, 0));
    Index rank = 0;
    for (Index i = 0; i < std::min(r.rows(), r.cols()); ++i)
      if (std::abs(r(i, i)) > cut) ++rank;
    auto q = qr.householderQ() * dense_identity.topLeftCorner(a.rows(), rank).eval();
    return (q * q.adjoint()).eval();
  };
  if (a.field == Field::Real) {
    Eigen::ColPivHouseholderQR<DenseReal> qr(a.m.real());
    return Matrix::from_real(project(qr, DenseReal::Identity(a.rows(), a.rows()).eval()));
  }
  Eigen::ColPivHouseholderQR<Dense> qr(a.m);
  return Matrix::from_complex(project(qr, Dense::Identity(a.rows(), a.rows()).eval()));
}

Frame null_space(const Matrix& a, double rel) {
  if (a.rows() == 0) return Frame(Matrix::identity(a.cols(), a.field));
  SvdResult s = svd(a);
  const Index r = rank_from(s.sigma, rel);
  return Frame(s.V.block(0, r, a.cols(), a.cols() - r));
}

Frame complement(const Frame& f) {
  if (f.dim() == 0) return Frame(Matrix::identity(f.ambient(), f.field()));
  SvdResult s = svd(f.cols());
  return Frame(s.U.block(0, f.dim(), f.ambient(), f.ambient() - f.dim()));
}

EighResult eigh(const Matrix& a) {
  require(a.rows() == a.cols(), Errc::dimension_mismatch, "eigh: matrix not square");
  require(hs_norm(a.adjoint() - a) <= 1e-10 * std::max(1.0, hs_norm(a)),
          Errc::invalid_value, "eigh: matrix is not Hermitian");
  if (a.rows() == 0) return EighResult{RealVector::Zero(0), a};
  if (a.field == Field::Real) {
    Eigen::SelfAdjointEigenSolver<DenseReal> es(a.m.real());
    require(es.info() == Eigen::Success, Errc::non_convergence, "eigh failed to converge");
    return EighResult{es.eigenvalues(), Matrix::from_real(es.eigenvectors())};
  }
  Eigen::SelfAdjointEigenSolver<Dense> es(a.m);
  require(es.info() == Eigen::Success, Errc::non_convergence, "eigh failed to converge");
  return EighResult{es.eigenvalues(), Matrix::from_complex(es.eigenvectors())};
}

double subspace_distance(const Frame& a, const Frame& b) {
  require(a.ambient() == b.ambient(), Errc::dimension_mismatch,
          "subspace_distance: different ambient dimensions");
  return hs_dist(projection_onto(a), projection_onto(b));
}

Frame span_union(const Frame& a, const Frame& b, double rel) {
  return orthonormalize(hcat(a.cols(), b.cols()), rel);
}

}  // namespace lagcat
