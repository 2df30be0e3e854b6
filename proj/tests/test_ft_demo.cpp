#include <doctest.h>

#include <cmath>
#include <vector>

#include "lagcat/clifford.hpp"
#include "lagcat/ft_demo.hpp"

using namespace lagcat;

namespace {

SpectralObject half_integer(Index n_max, Index mult = 1) {
  return SpectralObject{SpinStructure::HalfInteger, n_max, mult, Field::Real};
}
SpectralObject integer(Index n_max, Index mult = 1) {
  return SpectralObject{SpinStructure::Integer, n_max, mult, Field::Real};
}

// Permutation of one grading block that merges two multiplicity-1 summands
// (eigenvalue-major concatenation [a_0..a_{n-1}, b_0..b_{n-1}]) into the
// multiplicity-2 layout (eigenvalue-major, copy-minor).
Dense merge_permutation(Index n) {
  Dense p = Dense::Zero(2 * n, 2 * n);
  for (Index k = 0; k < n; ++k) {
    p(2 * k, k) = 1.0;          // copy a of eigenvalue k
    p(2 * k + 1, n + k) = 1.0;  // copy b
  }
  return p;
}

}  // namespace

TEST_SUITE("ft_demo") {

TEST_CASE("spectral data of the two spin structures") {
  const std::vector<double> h = positive_eigenvalues(half_integer(4));
  REQUIRE(h.size() == 4);
  CHECK(h[0] == 0.5);
  CHECK(h[3] == 3.5);
  const std::vector<double> z = positive_eigenvalues(integer(4));
  CHECK(z[0] == 1.0);
  CHECK(z[3] == 4.0);
  CHECK(kernel_dim(half_integer(4)) == 0);
  CHECK(kernel_dim(integer(4, 3)) == 3);
  CHECK_THROWS_AS((void)positive_eigenvalues(half_integer(0)), Error);
  CHECK_THROWS_AS((void)boundary_space(half_integer(4, 0)), Error);
}

TEST_CASE("boundary spaces carry the grading and the degree-1 action") {
  const SuperSpace v = boundary_space(half_integer(5, 2));
  CHECK(v.dim_plus() == 10);
  CHECK(v.dim_minus() == 10);
  CHECK(v.degree() == 1);
  REQUIRE(v.generators().size() == 1);
  CHECK(module_relations_residual(v.dim_plus(), v.dim_minus(), v.generators()) == 0.0);

  const SuperSpace w = boundary_space(integer(5, 2));
  CHECK(w.dim_plus() == 12);  // five pairs + the kernel, multiplicity 2
  CHECK(w.dim_minus() == 10);
  CHECK(w.degree() == 0);
  CHECK(w.generators().empty());
}

TEST_CASE("APS sub-Lagrangian: honest Lagrangian without kernel, kernel defect with") {
  const SpectralObject obj = half_integer(6);
  const SuperSpace v = boundary_space(obj);
  const GraphIsometry aps = aps_sublagrangian(obj);
  CHECK(aps.is_unitary());
  const Frame l = from_graph_isometry(aps);
  CHECK(classify(v, l).kind == LagKind::Lagrangian);
  CHECK(defect_space(v, l).dim() == 0);
  // The Clifford generator exchanges the two spectral halves.
  const Frame flipped = gamma_image(v, l);
  const Frame moved = orthonormalize(v.generators()[0] * l.cols());
  CHECK(subspace_distance(moved, flipped) <= 1e-12);
  // The flip image is the negative half, built here by hand.
  Dense neg = Dense::Zero(12, 6);
  for (Index i = 0; i < 6; ++i) {
    neg(i, i) = 1.0 / std::sqrt(2.0);
    neg(6 + i, i) = -1.0 / std::sqrt(2.0);
  }
  CHECK(subspace_distance(flipped, Frame(Matrix(neg, Field::Real))) <= 1e-12);

  const SpectralObject zobj = integer(6, 2);
  const SuperSpace w = boundary_space(zobj);
  const Frame lz = from_graph_isometry(aps_sublagrangian(zobj));
  const Classification c = classify(w, lz);
  CHECK(c.kind == LagKind::SubLagrangian);
  CHECK(defect_space(w, lz).dim() == 2);  // the kernel block, multiplicity 2
  const IndexClass idx = sub_lagrangian_index(w, lz);
  CHECK(idx.group == IndexGroup::Z);
  CHECK(idx.value == 2);  // dim ker u - dim ker u^H = multiplicity - 0
}

TEST_CASE("bordism construction and validation") {
  CHECK_THROWS_AS((void)Bordism::cylinder(-0.1), Error);
  CHECK_THROWS_AS((void)Bordism::cylinder(std::nan("")), Error);
  CHECK(Bordism::cylinder(0.0).kind == BordismKind::Cylinder);

  CHECK(bordism_symbol(Bordism::cylinder(0.7), SpinStructure::HalfInteger) ==
        TailSymbol::aps_exponential(1.0, 0.7));
  CHECK(bordism_symbol(Bordism::cylinder(0.7), SpinStructure::Integer) ==
        TailSymbol::exponential(1.0, -0.7));
  CHECK(bordism_symbol(Bordism::identity_thin(), SpinStructure::HalfInteger) ==
        TailSymbol::constant(1.0));
  CHECK_THROWS_AS((void)bordism_symbol(Bordism::half_disc_in(), SpinStructure::HalfInteger),
                  Error);
}

TEST_CASE("the cylinder correspondence is the graph of the solution operator") {
  const SpectralObject obj = half_integer(6);
  const double l = 0.8;
  const Correspondence c = bordism_lagrangian(Bordism::cylinder(l), obj);
  // In the flip eigenbasis the solution operator acts per eigenvalue pair as
  // [[cosh, -sinh], [-sinh, cosh]] of l*lambda.
  Dense t = Dense::Zero(12, 12);
  const std::vector<double> lambdas = positive_eigenvalues(obj);
  for (Index k = 0; k < 6; ++k) {
    const double x = l * lambdas[static_cast<size_t>(k)];
    t(k, k) = std::cosh(x);
    t(6 + k, 6 + k) = std::cosh(x);
    t(k, 6 + k) = -std::sinh(x);
    t(6 + k, k) = -std::sinh(x);
  }
  const Matrix tm(t, Field::Real);
  const SuperSpace v = boundary_space(obj);
  CHECK(is_lagrangian_graph(v, v, tm));
  CHECK(hs_dist(u_to_T(c), tm) <= 1e-9 * hs_norm(tm));
  // Every truncation of every bordism Lagrangian is B-isotropic.
  CHECK(isotropy_residual(product_space(v, v), c.frame()) <= 1e-13);

  // The thin identity is the identity correspondence.
  const Correspondence id = bordism_lagrangian(Bordism::identity_thin(), obj);
  CHECK(hs_dist(u_to_T(id), Matrix::identity(12, Field::Real)) <= 1e-14);
}

TEST_CASE("integer-spin cylinders keep the kernel trace unchanged") {
  const SpectralObject obj = integer(5);
  const Correspondence c = bordism_lagrangian(Bordism::cylinder(0.6), obj);
  const SuperSpace v = boundary_space(obj);
  CHECK(isotropy_residual(product_space(v, v), c.frame()) <= 1e-13);
  const Matrix t = u_to_T(c);
  // Kernel mode: last plus coordinate maps to itself with coefficient 1.
  CHECK(t.m(5, 5).real() == doctest::Approx(1.0).epsilon(1e-14));
  for (Index i = 0; i < 5; ++i)
    CHECK(t.m(5, i) == Complex(0.0, 0.0));
}

TEST_CASE("half-discs are the spectral halves") {
  const SpectralObject obj = half_integer(5);
  const SuperSpace v = boundary_space(obj);
  const Correspondence out = bordism_lagrangian(Bordism::half_disc_out(), obj);
  CHECK(out.source().dim() == 0);
  // Product-space coordinates of a (0|0) source are V's own sorted basis, so
  // the frame can be compared with the flip image of APS directly.
  const Frame neg = gamma_image(v, from_graph_isometry(aps_sublagrangian(obj)));
  CHECK(subspace_distance(out.frame(), neg) <= 1e-12);

  const Correspondence in = bordism_lagrangian(Bordism::half_disc_in(), obj);
  CHECK(in.target().dim() == 0);
  // Coordinates are [V0-; V0+] here; the positive half has equal blocks.
  CHECK(hs_dist(in.frame().cols().block(0, 0, 5, 5),
                in.frame().cols().block(5, 0, 5, 5)) <= 1e-14);
  CHECK(isotropy_residual(product_space(v, in.target()), in.frame()) <= 1e-13);

  CHECK_THROWS_AS((void)bordism_lagrangian(Bordism::half_disc_out(), integer(5)), Error);
}

TEST_CASE("gluing cylinders is exact in the symbol algebra and tight densely") {
  for (const double l1 : {0.1, 0.5, 1.0})
    for (const double l2 : {0.1, 0.5, 1.0})
      for (const Index n : {8, 16, 32}) {
        const GlueReport r =
            glue(Bordism::cylinder(l1), Bordism::cylinder(l2), half_integer(n));
        CHECK(r.glued.kind == BordismKind::Cylinder);
        CHECK(r.glued.length == l1 + l2);
        CHECK(r.symbol_exact);
        CHECK(r.dense_defect <= 1e-9);
        CHECK(r.middle_gap >= 1.0);
        CHECK_FALSE(r.used_fallback);
      }
}

TEST_CASE("gluing handles identities, integer spin, and half-discs") {
  const SpectralObject obj = half_integer(8);
  const GlueReport idcyl = glue(Bordism::identity_thin(), Bordism::cylinder(0.4), obj);
  CHECK(idcyl.glued.kind == BordismKind::Cylinder);
  CHECK(idcyl.glued.length == 0.4);
  CHECK(idcyl.symbol_exact);
  CHECK(idcyl.dense_defect <= 1e-12);
  const GlueReport idid = glue(Bordism::identity_thin(), Bordism::identity_thin(), obj);
  CHECK(idid.glued.kind == BordismKind::IdentityThin);
  CHECK(idid.symbol_exact);

  const GlueReport zz = glue(Bordism::cylinder(0.3), Bordism::cylinder(0.7), integer(8));
  CHECK(zz.symbol_exact);
  CHECK(zz.dense_defect <= 1e-9);

  const GlueReport capped = glue(Bordism::cylinder(0.5), Bordism::half_disc_in(), obj);
  CHECK(capped.glued.kind == BordismKind::HalfDiscIn);
  CHECK(capped.symbol_exact);
  CHECK(capped.dense_defect <= 1e-9);
  CHECK(capped.middle_gap >= 1.0);
  const GlueReport grown = glue(Bordism::half_disc_out(), Bordism::cylinder(0.5), obj);
  CHECK(grown.glued.kind == BordismKind::HalfDiscOut);
  CHECK(grown.dense_defect <= 1e-9);

  CHECK_THROWS_AS((void)glue(Bordism::half_disc_in(), Bordism::cylinder(0.5), obj), Error);
  CHECK_THROWS_AS((void)glue(Bordism::cylinder(0.5), Bordism::half_disc_out(), obj), Error);
  try {
    (void)glue(Bordism::half_disc_out(), Bordism::half_disc_in(), obj);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_composable_kinds);
  }
}

TEST_CASE("closeness to the APS polarization is decided exactly") {
  const SpectralObject obj = half_integer(8);
  CHECK(closeness_to_aps(Bordism::cylinder(0.1), obj));
  CHECK(closeness_to_aps(Bordism::cylinder(2.0), obj));
  CHECK_FALSE(closeness_to_aps(Bordism::cylinder(0.0), obj));
  CHECK_FALSE(closeness_to_aps(Bordism::identity_thin(), obj));
  CHECK(closeness_to_aps(Bordism::half_disc_in(), obj));
  CHECK(closeness_to_aps(Bordism::cylinder(0.5), integer(8)));
  CHECK_FALSE(closeness_to_aps(Bordism::cylinder(0.0), integer(8)));

  // Dense cross-check: the graph-unitary distance to the infinite-cylinder
  // reference stays bounded for l > 0 and grows like 2 sqrt(n) at l = 0.
  const std::vector<Index> ns = {8, 16, 32};
  const std::vector<double> good = closeness_norm_ladder(Bordism::cylinder(0.5), obj, ns);
  REQUIRE(good.size() == 3);
  CHECK(good[2] - good[1] <= 1e-3);
  CHECK(good[2] <= good[0] + 1e-2);
  const std::vector<double> bad = closeness_norm_ladder(Bordism::cylinder(0.0), obj, ns);
  for (size_t i = 0; i < 3; ++i)
    CHECK(bad[i] == doctest::Approx(2.0 * std::sqrt(static_cast<double>(ns[i]))).epsilon(1e-12));
  const std::vector<double> disc = closeness_norm_ladder(Bordism::half_disc_in(), obj, ns);
  CHECK(disc == std::vector<double>{0.0, 0.0, 0.0});
}

TEST_CASE("thin identities stay transversal, long cylinders degenerate") {
  CHECK(general_position(bordism_lagrangian(Bordism::identity_thin(), half_integer(32))));
  CHECK(general_position(bordism_lagrangian(Bordism::cylinder(0.1), half_integer(8))));
  CHECK_FALSE(general_position(bordism_lagrangian(Bordism::cylinder(1.0), half_integer(32))));
}

TEST_CASE("disjoint unions sum blockwise") {
  const Correspondence a = bordism_lagrangian(Bordism::cylinder(0.4), half_integer(4));
  const Correspondence b = bordism_lagrangian(Bordism::cylinder(0.9), half_integer(6));
  const Correspondence sum = direct_sum_correspondence(a, b);
  CHECK(sum.source().dim_plus() == 10);
  CHECK(sum.source().degree() == 1);

  // Gluing commutes with disjoint union.
  const Correspondence a2 = bordism_lagrangian(Bordism::cylinder(0.2), half_integer(4));
  const Correspondence b2 = bordism_lagrangian(Bordism::cylinder(0.3), half_integer(6));
  const Correspondence lhs = compose_formula(sum, direct_sum_correspondence(a2, b2)).corr;
  const Correspondence rhs = direct_sum_correspondence(compose_formula(a, a2).corr,
                                                       compose_formula(b, b2).corr);
  CHECK(subspace_distance(lhs.frame(), rhs.frame()) <= 1e-10);

  // Two multiplicity-1 circles with the same spectrum merge into the
  // multiplicity-2 object, up to the copy-interleaving permutation.
  const Correspondence one_a = bordism_lagrangian(Bordism::cylinder(0.4), half_integer(4));
  const Correspondence merged = bordism_lagrangian(Bordism::cylinder(0.4), half_integer(4, 2));
  const Correspondence summed = direct_sum_correspondence(one_a, one_a);
  const Matrix pi(merge_permutation(4), Field::Real);
  const Matrix rows = block_diag(pi, pi);  // [W0+; W1-] blocks permute alike
  const Matrix cols = block_diag(pi, pi);  // [W0-; W1+]
  CHECK(max_abs(merged.u() - rows * summed.u() * cols.adjoint()) == 0.0);
}

TEST_CASE("cylinder demo report") {
  const CylinderDemoReport r = cylinder_demo(0.5, 0.7, 16);
  CHECK(r.glue.glued.length == 1.2);
  CHECK(r.glue.symbol_exact);
  CHECK(r.glue.dense_defect <= 1e-9);
  CHECK(r.type2_first);
  CHECK(r.type2_second);
  CHECK(r.type2_glued);
  CHECK(r.lagrangian_residual <= 1e-13);
  REQUIRE(r.ladder_n.size() == 3);
  CHECK(r.ladder_norm[2] - r.ladder_norm[1] <= 1e-6);
}

}  // TEST_SUITE
