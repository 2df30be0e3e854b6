#include <cmath>

#include "doctest.h"
#include "lagcat/polarization.hpp"
#include "lagcat/random.hpp"

using namespace lagcat;

namespace {

PolarizedSpace haar_polarized(Rng& rng, Index n, Field f) {
  return PolarizedSpace(SuperSpace(n, n, f), haar_unitary(rng, n, f));
}

Correspondence identity_correspondence(const SuperSpace& v) {
  const Field f = v.field();
  const Matrix u = assemble_blocks(
      Matrix::zero(v.dim_plus(), v.dim_minus(), f), Matrix::identity(v.dim_plus(), f),
      Matrix::identity(v.dim_minus(), f), Matrix::zero(v.dim_minus(), v.dim_plus(), f));
  return Correspondence(v, v, u);
}

}  // namespace

TEST_SUITE("polarization") {

TEST_CASE("the reference morphism is exactly type (2) and never thin") {
  Rng rng(7401);
  for (Field f : {Field::Real, Field::Complex}) {
    const PolarizedSpace p0 = haar_polarized(rng, 3, f);
    const PolarizedSpace p1 = haar_polarized(rng, 3, f);
    const MorphismClass cls =
        classify_morphism(p0, p1, reference_morphism(p0, p1), 1e-8);
    CHECK(cls.type == MorphismType::Type2);
    CHECK(cls.dev2 <= 1e-14);
    CHECK(cls.offdiag_residual > 1.0);  // diagonal blocks are unitaries, not 0
  }
}

TEST_CASE("the identity correspondence is exactly type (1) for matching polarizations") {
  Rng rng(7402);
  const SuperSpace v(3, 3, Field::Complex);
  const Matrix w = haar_unitary(rng, 3, Field::Complex);
  const PolarizedSpace p(v, w);
  const MorphismClass cls = classify_morphism(p, p, identity_correspondence(v), 1e-10);
  CHECK(cls.type == MorphismType::Type1);
  CHECK(cls.dev1 <= 1e-14);
  CHECK(cls.graph_unitary.has_value());
  CHECK(hs_dist(*cls.graph_unitary, Matrix::identity(6, Field::Complex)) <= 1e-12);
}

TEST_CASE("sampled type (1) morphisms classify as type (1) with zero deviation") {
  Rng rng(7403);
  for (Field f : {Field::Real, Field::Complex}) {
    const PolarizedSpace p0 = haar_polarized(rng, 4, f);
    const PolarizedSpace p1 = haar_polarized(rng, 4, f);
    const Correspondence c = random_type1(rng, p0, p1);
    const MorphismClass cls = classify_morphism(p0, p1, c, 1e-10);
    CHECK(cls.type == MorphismType::Type1);
    CHECK(cls.dev1 <= 1e-13);
    // Its graph unitary intertwines the polarizations: T-- w0 = w1 T++.
    REQUIRE(cls.graph_unitary.has_value());
    const Matrix& t = *cls.graph_unitary;
    const Matrix tpp = t.block(0, 0, 4, 4), tmm = t.block(4, 4, 4, 4);
    CHECK(hs_norm(tmm * p0.w() - p1.w() * tpp) <= 1e-12);
  }
}

TEST_CASE("sampled type (2) morphisms classify as type (2) with O(eps) deviation") {
  Rng rng(7404);
  const double eps = 1e-4;
  for (Field f : {Field::Real, Field::Complex}) {
    const PolarizedSpace p0 = haar_polarized(rng, 4, f);
    const PolarizedSpace p1 = haar_polarized(rng, 4, f);
    const Correspondence c = random_type2(rng, p0, p1, eps);
    const MorphismClass cls = classify_morphism(p0, p1, c, 100 * eps);
    CHECK(cls.type == MorphismType::Type2);
    CHECK(cls.dev2 <= 10 * eps);
    CHECK(cls.dev2 > 0.0);
  }
}

TEST_CASE("composition dispatch: (1)(1)->(1), mixed and (2)(2)->(2)") {
  Rng rng(7405);
  const double thr = 1e-6;
  const PolarizedSpace p0 = haar_polarized(rng, 3, Field::Complex);
  const PolarizedSpace p1 = haar_polarized(rng, 3, Field::Complex);
  const PolarizedSpace p2 = haar_polarized(rng, 3, Field::Complex);
  auto t1_01 = [&] { return random_type1(rng, p0, p1); };
  auto t1_12 = [&] { return random_type1(rng, p1, p2); };
  auto t2_01 = [&] { return random_type2(rng, p0, p1, 1e-9); };
  auto t2_12 = [&] { return random_type2(rng, p1, p2, 1e-9); };

  const CatComposeResult r11 = compose_in_category(p0, p1, p2, t1_01(), t1_12(), thr);
  CHECK(r11.predicted == MorphismType::Type1);
  CHECK((r11.out.type == MorphismType::Type1 || r11.out.type == MorphismType::Both));

  const CatComposeResult r12 = compose_in_category(p0, p1, p2, t1_01(), t2_12(), thr);
  CHECK(r12.predicted == MorphismType::Type2);
  const CatComposeResult r21 = compose_in_category(p0, p1, p2, t2_01(), t1_12(), thr);
  CHECK(r21.predicted == MorphismType::Type2);
  const CatComposeResult r22 = compose_in_category(p0, p1, p2, t2_01(), t2_12(), thr);
  CHECK(r22.predicted == MorphismType::Type2);
  // (2)(2) composition has the full spectral gap ~2.
  CHECK(r22.composed.gap > 1.5);
}

TEST_CASE("a correspondence that is neither type fails to compose in the category") {
  Rng rng(7406);
  const PolarizedSpace p = haar_polarized(rng, 3, Field::Complex);
  // With a tiny threshold a Haar correspondence is almost surely neither.
  const Correspondence c = random_correspondence(rng, p.space(), p.space());
  CHECK_THROWS_AS((void)compose_in_category(p, p, p, c, c, 1e-12), Error);
}

TEST_CASE("projector distance and graph distance control each other") {
  Rng rng(7407);
  const SuperSpace v(4, 4, Field::Complex);
  for (int t = 0; t < 10; ++t) {
    const GraphIsometry a(v, haar_unitary(rng, 4, Field::Complex));
    const GraphIsometry b(v, haar_unitary(rng, 4, Field::Complex));
    const double du = hs_close(a, b);
    const double dp = hs_dist(projection_formula(a), projection_formula(b));
    CHECK(dp <= 3.0 * du + 1e-13);
    CHECK(du <= std::sqrt(2.0) * dp + 1e-13);
  }
}

TEST_CASE("type deviations move by at most the reference perturbation") {
  Rng rng(7408);
  const SuperSpace v(4, 4, Field::Complex);
  const Matrix w0 = haar_unitary(rng, 4, Field::Complex);
  const Matrix w1 = haar_unitary(rng, 4, Field::Complex);
  const Correspondence c = random_correspondence(rng, v, v);
  // Perturbed references (still unitary).
  Rng rng2(7409);
  const Matrix q0 = haar_unitary(rng2, 4, Field::Complex);
  const Matrix q1 = haar_unitary(rng2, 4, Field::Complex);
  const double step = 1e-3;
  auto blend = [&](const Matrix& w, const Matrix& q) {
    const SvdResult s = svd(w + step * q);  // polar factor: nearest unitary
    return s.U * s.V.adjoint();
  };
  const Matrix w0p = blend(w0, q0), w1p = blend(w1, q1);
  const double d0 = hs_dist(w0, w0p), d1 = hs_dist(w1, w1p);
  const MorphismClass before =
      classify_morphism(PolarizedSpace(v, w0), PolarizedSpace(v, w1), c, 1.0);
  const MorphismClass after =
      classify_morphism(PolarizedSpace(v, w0p), PolarizedSpace(v, w1p), c, 1.0);
  CHECK(std::abs(before.dev1 - after.dev1) <= d0 + d1 + 1e-12);
  CHECK(std::abs(before.dev2 - after.dev2) <= d0 + d1 + 1e-12);
}

TEST_CASE("opposite and direct sum of polarized spaces") {
  Rng rng(7410);
  const PolarizedSpace a = haar_polarized(rng, 2, Field::Complex);
  const PolarizedSpace b = haar_polarized(rng, 3, Field::Complex);
  const PolarizedSpace off = opposite_polarized(a);
  CHECK(hs_dist(off.w(), -a.w().adjoint()) == 0.0);
  CHECK(hs_dist(opposite_polarized(off).w(), a.w()) == 0.0);

  const PolarizedSpace s = direct_sum_polarized(a, b);
  const DirectSum ds = direct_sum(a.space(), b.space());
  const Frame la = from_graph_isometry(a.ref());
  const Frame lb = from_graph_isometry(b.ref());
  const Frame embedded = orthonormalize(
      hcat(ds.embed0 * la.cols(), ds.embed1 * lb.cols()));
  CHECK(subspace_distance(from_graph_isometry(s.ref()), embedded) <= 1e-12);
}

}  // TEST_SUITE
