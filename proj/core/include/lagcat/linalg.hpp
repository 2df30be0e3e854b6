#pragma once

#include "lagcat/matrix.hpp"

namespace lagcat {

// Full singular value decomposition A = U * diag(sigma) * V^H with U, V
// square unitaries over the field of A. For a Real-tagged A the factors are
// computed by a real SVD, so they are Real-tagged with exactly zero imaginary
// parts; there is a single public entry point for both fields.
struct SvdResult {
  Matrix U;          // rows(A) x rows(A)
  RealVector sigma;  // min(rows, cols), descending
  Matrix V;          // cols(A) x cols(A)
};

SvdResult svd(const Matrix& a);

// Absolute cutoff below which (inclusive) a singular value counts as zero:
// rel * max(sigma), or 0 for an empty spectrum.
double rank_cutoff_abs(const RealVector& sigma, double rel);
Index rank_from(const RealVector& sigma, double rel);
Index numerical_rank(const Matrix& a, double rel);

// Largest and smallest singular value; smallest_nonzero skips values at or
// below the relative cutoff (returns 0 when all are).
double sv_max(const Matrix& a);
double sv_min(const Matrix& a);
double smallest_nonzero_sv(const Matrix& a, double rel);

// Ratio sigma_max / sigma_min; throws singular when sigma_min vanishes at the
// relative cutoff.
double cond(const Matrix& a, double rel);

// Moore-Penrose inverse with the relative rank cutoff above: singular values
// at or below the cutoff are dropped, so ker/ran of the result are the
// orthogonal complements of the numerically truncated ran/ker of A.
Matrix generalized_inverse(const Matrix& a, double rel = Tolerances{}.rank_cutoff);

// Plain inverse for a square matrix known to be regular; throws singular if
// the smallest singular value is at or below the relative cutoff.
Matrix inverse(const Matrix& a, double rel = Tolerances{}.rank_cutoff);

// Isometric column frame: F^H F = I within tol.ortho. The frame is the
// library's representation of a subspace: span of the columns. Zero columns
// are allowed (the zero subspace of an ambient space).
class Frame {
 public:
  explicit Frame(Matrix cols, const Tolerances& tol = {});
  static Frame zero_subspace(Index ambient, Field f);

  const Matrix& cols() const { return cols_; }
  Index ambient() const { return cols_.rows(); }
  Index dim() const { return cols_.cols(); }
  Field field() const { return cols_.field; }

 private:
  Matrix cols_;
};

// Orthonormal basis of the column span of A (SVD route; rank by the relative
// cutoff). The QR route below is an independent implementation kept for
// cross-checking the two.
Frame orthonormalize(const Matrix& a, double rel = Tolerances{}.rank_cutoff);
Matrix projection_onto(const Frame& f);          // F F^H
Matrix projection_via_qr(const Matrix& a, double rel = Tolerances{}.rank_cutoff);

// Orthonormal basis of ker(A) (right singular vectors at or below the
// cutoff) and of the orthogonal complement of span(F).
Frame null_space(const Matrix& a, double rel = Tolerances{}.rank_cutoff);
Frame complement(const Frame& f);

// Eigendecomposition of a Hermitian matrix, eigenvalues ascending; the same
// real/complex dispatch as svd.
struct EighResult {
  RealVector values;
  Matrix vectors;  // columns are orthonormal eigenvectors
};
EighResult eigh(const Matrix& a);

// Frobenius distance of the two orthogonal projectors; the library's notion
// of distance between subspaces (never a comparison of bases).
double subspace_distance(const Frame& a, const Frame& b);
// Span of the union of the two column families.
Frame span_union(const Frame& a, const Frame& b, double rel = Tolerances{}.rank_cutoff);

}  // namespace lagcat
