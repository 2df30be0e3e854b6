#pragma once

#include <vector>

#include "lagcat/linalg.hpp"
#include "lagcat/matrix.hpp"

namespace lagcat {

// Finite-dimensional Z/2-graded inner-product space V = V+ (+) V-, stored in
// a basis sorted by grading: coordinates [0, dim_plus) span V+ and the rest
// span V-, so the grading involution is Gamma = diag(+I, -I) in the stored
// basis. The indefinite pairing used throughout is
//     B(x, y) = <Gamma x, y>,
// conjugate-linear in the first slot. A space may carry `degree` anticommuting
// odd generators e_1..e_d (skew-adjoint, e_j^2 = -1, e_j Gamma = -Gamma e_j),
// making it a graded module for the Clifford algebra of that degree.
class SuperSpace {
 public:
  SuperSpace(Index dim_plus, Index dim_minus, Field field, int degree = 0,
             std::vector<Matrix> generators = {}, const Tolerances& tol = {});

  Index dim_plus() const { return dim_plus_; }
  Index dim_minus() const { return dim_minus_; }
  Index dim() const { return dim_plus_ + dim_minus_; }
  Field field() const { return field_; }
  int degree() const { return degree_; }
  const std::vector<Matrix>& generators() const { return generators_; }

  Matrix gamma() const;
  // Signature-level equality: dimensions, field and degree agree. Generator
  // matrices are not compared; callers that need the same module structure
  // must check those separately.
  bool same_signature(const SuperSpace& other) const;

 private:
  Index dim_plus_, dim_minus_;
  Field field_;
  int degree_;
  std::vector<Matrix> generators_;
};

// B(x, y) = <Gamma x, y>, conjugate-linear in x.
Complex b_form(const SuperSpace& v, const Vector& x, const Vector& y);
// Gram matrix F^H Gamma F of the pairing on a column family.
Matrix b_gram(const SuperSpace& v, const Matrix& f);

// Parity-reversed space Pi V: the roles of V+ and V- swap. The returned space
// lists the old minus coordinates first; opposite_permutation is the unitary
// change of basis from V coordinates to Pi V coordinates. Odd generators are
// carried over with a sign flip (conjugation by Gamma composed with the
// relabelling), which preserves all module relations.
SuperSpace opposite(const SuperSpace& v);
Matrix opposite_permutation(const SuperSpace& v);

// Direct sum with grading-sorted coordinates: [V0+, V1+, V0-, V1-]. The
// embeddings are the isometries of the summands into the sum; generators (if
// any; degrees must agree) act summand-wise.
struct DirectSum {
  SuperSpace space;
  Matrix embed0;
  Matrix embed1;
};
DirectSum direct_sum(const SuperSpace& v0, const SuperSpace& v1);

// Largest violation of the module relations among the given odd generators
// for the given grading sizes (0 for a degree-0 space).
double module_relations_residual(Index dim_plus, Index dim_minus,
                                 const std::vector<Matrix>& generators);

// Residual of invariance of span(F) under every generator: max_j of
// ||(I - P) e_j F||.
double invariance_residual(const SuperSpace& v, const Frame& f);

}  // namespace lagcat
