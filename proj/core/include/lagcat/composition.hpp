#pragma once

#include <optional>
#include <string>

#include "lagcat/lagrangian.hpp"

namespace lagcat {

// Ambient space of a correspondence from V0 to V1: W = Pi V0 (+) V1 with the
// grading-sorted coordinate order
//     W+ = [V0- coords, V1+ coords],   W- = [V0+ coords, V1- coords].
// corr_embed0 / corr_embed1 are the isometric inclusions of V0 and V1
// (in their own sorted coordinates) into W.
SuperSpace product_space(const SuperSpace& v0, const SuperSpace& v1);
Matrix corr_embed0(const SuperSpace& v0, const SuperSpace& v1);
Matrix corr_embed1(const SuperSpace& v0, const SuperSpace& v1);

// Lagrangian correspondence V0 -> V1: a Lagrangian subspace of Pi V0 (+) V1,
// stored as the graph of the unitary
//     u : V0- (+) V1+  ->  V0+ (+) V1-
// with blocks  u = [ u00 u01 ]   u00 : V0- -> V0+,  u01 : V1+ -> V0+,
//              [ u10 u11 ]   u10 : V0- -> V1-,  u11 : V1+ -> V1-.
// An element of the correspondence is the pair
//     x0 = (u00 a + u01 b) (+) a,   x1 = b (+) (u10 a + u11 b)
// for parameters a in V0-, b in V1+.
class Correspondence {
 public:
  Correspondence(SuperSpace v0, SuperSpace v1, Matrix u, const Tolerances& tol = {});

  const SuperSpace& source() const { return v0_; }
  const SuperSpace& target() const { return v1_; }
  const Matrix& u() const { return u_; }

  Matrix u00() const;
  Matrix u01() const;
  Matrix u10() const;
  Matrix u11() const;

  // The subspace in product_space(source, target) coordinates: columns
  // [I; u] / sqrt(2) over the parameter space V0- (+) V1+.
  Frame frame() const;
  GraphIsometry graph_isometry(const Tolerances& tol = {}) const;

 private:
  SuperSpace v0_, v1_;
  Matrix u_;
};

// True when the correspondence meets both coordinate subspaces transversally
// with margin: the compressions of its frame onto the V0 rows and the V1 rows
// both have largest singular value < 1 - margin.
bool general_position(const Correspondence& c, double margin = 1e-8);

// Unitary T : V0 -> V1 whose graph { x (+) T x } equals the correspondence.
// Exists iff u01 is invertible (throws singular_block otherwise; requires
// dim V0+ == dim V1+). Blocks of the result, in sorted coordinates:
//     T = [ u01^-1            -u01^-1 u00              ]
//         [ u11 u01^-1         u10 - u11 u01^-1 u00    ].
Matrix u_to_T(const Correspondence& c, const Tolerances& tol = {});

// Inverse conversion. Requires T++ invertible (singular_block) and graph(T)
// Lagrangian (not_isotropic), checked via is_lagrangian_graph:
//     u = [ -T++^-1 T+-                T++^-1        ]
//         [ T-- - T-+ T++^-1 T+-       T-+ T++^-1    ].
Correspondence T_to_u(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t,
                      const Tolerances& tol = {});

// Whether graph(T) is Lagrangian in Pi V0 (+) V1, i.e. T^H Gamma1 T = Gamma0
// within tol.proj scaled by max(1, cond(T)).
bool is_lagrangian_graph(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t,
                         const Tolerances& tol = {});
double lagrangian_graph_residual(const SuperSpace& v0, const SuperSpace& v1, const Matrix& t);

// Set-theoretic composition of two isotropic subspaces, given as frames in
// product-space coordinates: pairs (x0, x2) such that some x1 makes both
// (x0, x1) and (x1, x2) members. Computed from the null space of the middle
// matching constraint; always returns a B-isotropic frame in
// product_space(V0, V2) coordinates.
Frame compose_subspaces(const SuperSpace& v0, const SuperSpace& v1, const SuperSpace& v2,
                        const Frame& f01, const Frame& f12, const Tolerances& tol = {});

struct ComposeResult {
  Correspondence corr;
  bool used_fallback = false;     // block formula handed off to the subspace route
  double gap = 0.0;               // smallest nonzero singular value of I - v11 u11
  double unitarity_residual = 0;  // ||w^H w - I|| of the returned graph unitary
  std::string warning;
};

// Composition via the generalized-inverse block formula
//     w00 = u00 + u01 X v11 u10,  w01 = u01 X v12,
//     w10 = v21 Y u10,            w11 = v22 + v21 Y u11 v12,
// where X = (1 - v11 u11)^+ on V1+ and Y = (1 - u11 v11)^+ on V1-, and the
// v-blocks are the blocks of the second correspondence. When the nonzero
// spectrum of 1 - v11 u11 comes within a factor 10 of the rank cutoff the
// formula is ill-posed; the routine then warns and falls back to
// compose_bruteforce. The result is always verified unitary within tol.proj
// (not_unitary_result otherwise).
ComposeResult compose_formula(const Correspondence& c01, const Correspondence& c12,
                              const Tolerances& tol = {});

// Composition through compose_subspaces on the graph frames.
Correspondence compose_bruteforce(const Correspondence& c01, const Correspondence& c12,
                                  const Tolerances& tol = {});

// Violation report for the kernel geometry that makes the block formula exact:
// ker(1 - v11 u11) must lie in ker(u01) and ker(v21 u11) and be orthogonal to
// ran(v12) + ran(v11 u10); symmetrically for ker(1 - u11 v11).
struct KernelInclusionReport {
  double max_violation = 0.0;
  Index ker_plus_dim = 0;  // dim ker(1 - v11 u11)
  Index ker_minus_dim = 0; // dim ker(1 - u11 v11)
};
KernelInclusionReport check_kernel_inclusions(const Correspondence& c01,
                                              const Correspondence& c12,
                                              const Tolerances& tol = {});

// The correspondence on a pair of (1|1)-dimensional spaces whose graph
// unitary is the rotation by alpha: u = [[cos a, -sin a], [sin a, cos a]].
Correspondence rotation_correspondence(double alpha, Field f = Field::Real);

}  // namespace lagcat
