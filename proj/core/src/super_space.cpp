#include "lagcat/super_space.hpp"

#include <algorithm>
#include <string>

namespace lagcat {

namespace {

Matrix gamma_matrix(Index p, Index q, Field f) {
  Dense g = Dense::Zero(p + q, p + q);
  for (Index i = 0; i < p; ++i) g(i, i) = 1.0;
  for (Index i = p; i < p + q; ++i) g(i, i) = -1.0;
  return Matrix(std::move(g), f);
}

}  // namespace

double module_relations_residual(Index dim_plus, Index dim_minus,
                                 const std::vector<Matrix>& generators) {
  const Index n = dim_plus + dim_minus;
  if (generators.empty()) return 0.0;
  const Field f = generators.front().field;
  const Matrix id = Matrix::identity(n, f);
  const Matrix g = gamma_matrix(dim_plus, dim_minus, f);
  double worst = 0.0;
  for (size_t j = 0; j < generators.size(); ++j) {
    const Matrix& e = generators[j];
    worst = std::max(worst, hs_norm(e * e + id));         // e_j^2 = -1
    worst = std::max(worst, hs_norm(e.adjoint() + e));    // skew-adjoint
    worst = std::max(worst, hs_norm(e * g + g * e));      // odd
    for (size_t k = j + 1; k < generators.size(); ++k) {
      worst = std::max(worst, hs_norm(e * generators[k] + generators[k] * e));
    }
  }
  return worst;
}

SuperSpace::SuperSpace(Index dim_plus, Index dim_minus, Field field, int degree,
                       std::vector<Matrix> generators, const Tolerances& tol)
    : dim_plus_(dim_plus),
      dim_minus_(dim_minus),
      field_(field),
      degree_(degree),
      generators_(std::move(generators)) {
  require(dim_plus >= 0 && dim_minus >= 0, Errc::invalid_value, "negative dimension");
  require(degree >= 0, Errc::unsupported_degree, "negative degree");
  require(static_cast<size_t>(degree) == generators_.size(), Errc::degree_mismatch,
          "degree does not match the number of generators");
  for (const Matrix& e : generators_) {
    require(e.rows() == dim() && e.cols() == dim(), Errc::dimension_mismatch,
            "generator shape does not match the space");
    require(e.field == field_, Errc::field_mismatch, "generator field does not match the space");
  }
  const double res = module_relations_residual(dim_plus_, dim_minus_, generators_);
  require(res <= tol.ortho, Errc::not_a_module,
          "generators violate the module relations (residual " + std::to_string(res) + ")");
}

Matrix SuperSpace::gamma() const { return gamma_matrix(dim_plus_, dim_minus_, field_); }

bool SuperSpace::same_signature(const SuperSpace& other) const {
  return dim_plus_ == other.dim_plus_ && dim_minus_ == other.dim_minus_ &&
         field_ == other.field_ && degree_ == other.degree_;
}

Complex b_form(const SuperSpace& v, const Vector& x, const Vector& y) {
  require(x.size() == v.dim() && y.size() == v.dim(), Errc::dimension_mismatch,
          "b_form: vector size does not match the space");
  return (v.gamma().m * x).dot(y);  // Eigen dot is conjugate-linear in the first argument
}

Matrix b_gram(const SuperSpace& v, const Matrix& f) {
  require(f.rows() == v.dim(), Errc::dimension_mismatch,
          "b_gram: column family does not live in the space");
  return f.adjoint() * (v.gamma() * f);
}

Matrix opposite_permutation(const SuperSpace& v) {
  const Index p = v.dim_plus(), q = v.dim_minus();
  Dense perm = Dense::Zero(p + q, p + q);
  for (Index i = 0; i < q; ++i) perm(i, p + i) = 1.0;      // old minus -> new plus slots
  for (Index i = 0; i < p; ++i) perm(q + i, i) = 1.0;      // old plus  -> new minus slots
  return Matrix(std::move(perm), v.field());
}

SuperSpace opposite(const SuperSpace& v) {
  const Matrix perm = opposite_permutation(v);
  std::vector<Matrix> gens;
  gens.reserve(v.generators().size());
  for (const Matrix& e : v.generators()) gens.push_back(-(perm * e * perm.adjoint()));
  return SuperSpace(v.dim_minus(), v.dim_plus(), v.field(), v.degree(), std::move(gens));
}

DirectSum direct_sum(const SuperSpace& v0, const SuperSpace& v1) {
  common_field(v0.field(), v1.field());
  require(v0.degree() == v1.degree(), Errc::degree_mismatch,
          "direct_sum: summands have different degrees");
  const Index p0 = v0.dim_plus(), q0 = v0.dim_minus();
  const Index p1 = v1.dim_plus(), q1 = v1.dim_minus();
  const Index n = v0.dim() + v1.dim();
  Dense e0 = Dense::Zero(n, v0.dim());
  Dense e1 = Dense::Zero(n, v1.dim());
  for (Index i = 0; i < p0; ++i) e0(i, i) = 1.0;
  for (Index i = 0; i < q0; ++i) e0(p0 + p1 + i, p0 + i) = 1.0;
  for (Index i = 0; i < p1; ++i) e1(p0 + i, i) = 1.0;
  for (Index i = 0; i < q1; ++i) e1(p0 + p1 + q0 + i, p1 + i) = 1.0;
  Matrix m0(std::move(e0), v0.field());
  Matrix m1(std::move(e1), v1.field());
  std::vector<Matrix> gens;
  gens.reserve(v0.generators().size());
  for (size_t j = 0; j < v0.generators().size(); ++j) {
    gens.push_back(m0 * v0.generators()[j] * m0.adjoint() +
                   m1 * v1.generators()[j] * m1.adjoint());
  }
  SuperSpace sum(p0 + p1, q0 + q1, v0.field(), v0.degree(), std::move(gens));
  return DirectSum{std::move(sum), std::move(m0), std::move(m1)};
}

double invariance_residual(const SuperSpace& v, const Frame& f) {
  require(f.ambient() == v.dim(), Errc::dimension_mismatch,
          "invariance_residual: frame does not live in the space");
  if (v.generators().empty()) return 0.0;
  const Matrix p = projection_onto(f);
  const Matrix id = Matrix::identity(v.dim(), f.field());
  double worst = 0.0;
  for (const Matrix& e : v.generators()) {
    worst = std::max(worst, hs_norm((id - p) * (e * f.cols())));
  }
  return worst;
}

}  // namespace lagcat
