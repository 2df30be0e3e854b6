#pragma once

#include "lagcat/super_space.hpp"

namespace lagcat {

// Canonical encoding of a closed isotropic subspace of a super space V as the
// graph of a partial isometry u : V+ -> V-,
//     L = { (x + u x) / sqrt(2) : x in ker(u)^perp },
// i.e. the isotropic subspace determined by u together with its initial
// space. dim L = rank u; L is Lagrangian iff u is unitary (and then
// dim V+ = dim V-).
class GraphIsometry {
 public:
  GraphIsometry(SuperSpace v, Matrix u, const Tolerances& tol = {});

  const SuperSpace& space() const { return space_; }
  const Matrix& u() const { return u_; }
  Index rank() const { return rank_; }
  bool is_unitary(const Tolerances& tol = {}) const;

 private:
  SuperSpace space_;
  Matrix u_;
  Index rank_;
};

// ||F^H Gamma F||_F: zero iff span(F) is B-isotropic.
double isotropy_residual(const SuperSpace& v, const Frame& f);
bool is_isotropic(const SuperSpace& v, const Frame& f, const Tolerances& tol = {});

enum class LagKind { SubLagrangian, Lagrangian };

struct Classification {
  LagKind kind;
  Index dim;    // dim L
  Index codim;  // dim V - dim(L + Gamma L); 0 iff Lagrangian
};

// Throws not_isotropic when span(F) is not B-isotropic within tol.proj.
Classification classify(const SuperSpace& v, const Frame& f, const Tolerances& tol = {});

// Conversion between the two representations of a closed isotropic subspace.
// to_graph_isometry recovers u from the plus/minus row blocks of the frame
// (u = B A^+; for an isotropic frame the plus block A automatically has all
// singular values 1/sqrt(2), so the pseudo-inverse is perfectly conditioned).
GraphIsometry to_graph_isometry(const SuperSpace& v, const Frame& f,
                                const Tolerances& tol = {});
Frame from_graph_isometry(const GraphIsometry& g, const Tolerances& tol = {});

// Gamma L in canonical form: the graph of -u on the same initial space.
GraphIsometry gamma_image(const GraphIsometry& g);
Frame gamma_image(const SuperSpace& v, const Frame& f);

// Orthogonal complement of L + Gamma L (the defect space of a sub-Lagrangian).
// Equals ker(u) (+) ker(u^H) when L = graph of u.
Frame defect_space(const SuperSpace& v, const Frame& f, const Tolerances& tol = {});

// Closed form for the orthogonal projector onto L = graph of u:
//     P = 1/2 [ u^H u   u^H ]
//             [ u       u u^H ].
Matrix projection_formula(const GraphIsometry& g);

}  // namespace lagcat
