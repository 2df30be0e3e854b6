#pragma once

#include <Eigen/Dense>
#include <complex>

#include "lagcat/types.hpp"

namespace lagcat {

using Index = Eigen::Index;
using Complex = std::complex<double>;
using Dense = Eigen::MatrixXcd;
using DenseReal = Eigen::MatrixXd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Dense matrix together with its scalar field. Invariants (checked on
// construction): every entry is finite, and field == Real implies every
// imaginary part is exactly zero. All arithmetic preserves the invariant:
// sums/products/adjoints of zero-imaginary-part matrices have zero imaginary
// parts exactly, so Real-field data stays on the real path bit-for-bit.
struct Matrix {
  Dense m;
  Field field = Field::Real;

  Matrix() = default;
  Matrix(Dense data, Field f);

  Index rows() const { return m.rows(); }
  Index cols() const { return m.cols(); }

  static Matrix zero(Index r, Index c, Field f);
  static Matrix identity(Index n, Field f);
  static Matrix from_real(const DenseReal& r);
  static Matrix from_complex(const Dense& c);

  Matrix adjoint() const { return Matrix(m.adjoint(), field); }
  Matrix transpose() const { return Matrix(m.transpose(), field); }
  Matrix conjugate() const { return Matrix(m.conjugate(), field); }
  Matrix block(Index r0, Index c0, Index nr, Index nc) const;

  // Copy of this matrix retagged as complex (entries unchanged).
  Matrix promoted() const { return Matrix(m, Field::Complex); }
};

// Field of the result of combining two operands; throws field_mismatch when
// the tags differ. Mixing real and complex data is always an explicit
// promoted() call at the call site, never implicit.
Field common_field(Field a, Field b);

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Matrix operator*(Complex s, const Matrix& a);  // requires a.field == Complex

// Frobenius (Hilbert-Schmidt) norm.
double hs_norm(const Matrix& a);
double max_abs(const Matrix& a);
double hs_dist(const Matrix& a, const Matrix& b);

// [a b] and [a; b].
Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
// diag(a, b).
Matrix block_diag(const Matrix& a, const Matrix& b);

// 2x2 block assembly: [a00 a01; a10 a11] with consistency checks.
Matrix assemble_blocks(const Matrix& a00, const Matrix& a01, const Matrix& a10,
                       const Matrix& a11);

}  // namespace lagcat
