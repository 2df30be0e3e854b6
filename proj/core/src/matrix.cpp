#include "lagcat/matrix.hpp"

#include <cmath>

namespace lagcat {

const char* to_string(Errc c) {
  switch (c) {
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::field_mismatch: return "field_mismatch";
    case Errc::degree_mismatch: return "degree_mismatch";
    case Errc::space_mismatch: return "space_mismatch";
    case Errc::invalid_value: return "invalid_value";
    case Errc::parse_error: return "parse_error";
    case Errc::not_isotropic: return "not_isotropic";
    case Errc::not_partial_isometry: return "not_partial_isometry";
    case Errc::not_unitary: return "not_unitary";
    case Errc::singular_block: return "singular_block";
    case Errc::singular: return "singular";
    case Errc::non_convergence: return "non_convergence";
    case Errc::not_unitary_result: return "not_unitary_result";
    case Errc::not_a_module: return "not_a_module";
    case Errc::not_invariant: return "not_invariant";
    case Errc::not_a_morphism: return "not_a_morphism";
    case Errc::not_composable_kinds: return "not_composable_kinds";
    case Errc::unsupported_degree: return "unsupported_degree";
    case Errc::unsupported_symbols: return "unsupported_symbols";
    case Errc::not_closed: return "not_closed";
  }
  return "unknown_error";
}

namespace {

void validate(const Dense& m, Field f) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const Complex& z = m(i, j);
      require(std::isfinite(z.real()) && std::isfinite(z.imag()), Errc::invalid_value,
              "matrix entry is not finite");
      if (f == Field::Real) {
        require(z.imag() == 0.0, Errc::field_mismatch,
                "real-tagged matrix has a nonzero imaginary part");
      }
    }
  }
}

}  // namespace

Matrix::Matrix(Dense data, Field f) : m(std::move(data)), field(f) { validate(m, field); }

Matrix Matrix::zero(Index r, Index c, Field f) { return Matrix(Dense::Zero(r, c), f); }

Matrix Matrix::identity(Index n, Field f) { return Matrix(Dense::Identity(n, n), f); }

Matrix Matrix::from_real(const DenseReal& r) {
  Dense z = Dense::Zero(r.rows(), r.cols());
  z.real() = r;
  return Matrix(std::move(z), Field::Real);
}

Matrix Matrix::from_complex(const Dense& c) { return Matrix(c, Field::Complex); }

Matrix Matrix::block(Index r0, Index c0, Index nr, Index nc) const {
  require(r0 >= 0 && c0 >= 0 && nr >= 0 && nc >= 0 && r0 + nr <= rows() && c0 + nc <= cols(),
          Errc::dimension_mismatch, "block indices out of range");
  return Matrix(m.block(r0, c0, nr, nc), field);
}

Field common_field(Field a, Field b) {
  require(a == b, Errc::field_mismatch, "mixed real/complex operands");
  return a;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::dimension_mismatch,
          "operator+: shape mismatch");
  return Matrix(a.m + b.m, common_field(a.field, b.field));
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), Errc::dimension_mismatch,
          "operator-: shape mismatch");
  return Matrix(a.m - b.m, common_field(a.field, b.field));
}

Matrix operator-(const Matrix& a) { return Matrix(-a.m, a.field); }

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), Errc::dimension_mismatch, "operator*: inner dimension mismatch");
  return Matrix(a.m * b.m, common_field(a.field, b.field));
}

Matrix operator*(double s, const Matrix& a) { return Matrix(s * a.m, a.field); }

Matrix operator*(Complex s, const Matrix& a) {
  require(a.field == Field::Complex || s.imag() == 0.0, Errc::field_mismatch,
          "complex scalar on a real-tagged matrix");
  return Matrix(s * a.m, a.field);
}

double hs_norm(const Matrix& a) { return a.m.norm(); }

double max_abs(const Matrix& a) {
  return a.m.size() == 0 ? 0.0 : a.m.cwiseAbs().maxCoeff();
}

double hs_dist(const Matrix& a, const Matrix& b) { return (a - b).m.norm(); }

Matrix hcat(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows(), Errc::dimension_mismatch, "hcat: row count mismatch");
  Dense out(a.rows(), a.cols() + b.cols());
  out << a.m, b.m;
  return Matrix(std::move(out), common_field(a.field, b.field));
}

Matrix vcat(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.cols(), Errc::dimension_mismatch, "vcat: column count mismatch");
  Dense out(a.rows() + b.rows(), a.cols());
  out << a.m, b.m;
  return Matrix(std::move(out), common_field(a.field, b.field));
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  Dense out = Dense::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a.m;
  out.bottomRightCorner(b.rows(), b.cols()) = b.m;
  return Matrix(std::move(out), common_field(a.field, b.field));
}

Matrix assemble_blocks(const Matrix& a00, const Matrix& a01, const Matrix& a10,
                       const Matrix& a11) {
  require(a00.rows() == a01.rows() && a10.rows() == a11.rows() && a00.cols() == a10.cols() &&
              a01.cols() == a11.cols(),
          Errc::dimension_mismatch, "assemble_blocks: inconsistent block shapes");
  Field f = common_field(common_field(a00.field, a01.field), common_field(a10.field, a11.field));
  Dense out(a00.rows() + a10.rows(), a00.cols() + a01.cols());
  out << a00.m, a01.m, a10.m, a11.m;
  return Matrix(std::move(out), f);
}

}  // namespace lagcat
