#include <doctest.h>

#include <cmath>
#include <vector>

#include "lagcat/clifford.hpp"
#include "lagcat/random.hpp"

using namespace lagcat;

namespace {

// Worst-case residual of the graded-module relations, computed directly so
// the test does not lean on the SuperSpace constructor it is checking.
double relations_residual(const SuperSpace& v) {
  const Index n = v.dim();
  const Matrix id = Matrix::identity(n, v.field());
  const Matrix g = v.gamma();
  double worst = 0.0;
  const auto& e = v.generators();
  for (std::size_t i = 0; i < e.size(); ++i) {
    worst = std::max(worst, max_abs(e[i] * e[i] + id));
    worst = std::max(worst, max_abs(e[i].adjoint() + e[i]));
    worst = std::max(worst, max_abs(g * e[i] + e[i] * g));
    for (std::size_t j = i + 1; j < e.size(); ++j)
      worst = std::max(worst, max_abs(e[i] * e[j] + e[j] * e[i]));
  }
  return worst;
}

// Restrict a degree-(d+1) irreducible to its first d generators; the +1
// eigenspace of the involution Gamma e_{d+1} is then an invariant Lagrangian
// (the involution is Hermitian, commutes with the kept generators, and
// anticommutes with the grading, so its eigenspaces are half-dimensional,
// invariant, and swapped by Gamma).
struct SplitModule {
  SuperSpace space;
  Frame lagrangian;
};

SplitModule restricted_with_lagrangian(int d, Field f) {
  const SuperSpace w = irreducible_module(d + 1, f);
  std::vector<Matrix> gens(w.generators().begin(), w.generators().end() - 1);
  SuperSpace v(w.dim_plus(), w.dim_minus(), f, d, std::move(gens));
  const Matrix tau = w.gamma() * w.generators().back();
  const EighResult eg = eigh(tau);
  const Index n = w.dim();
  Frame l{Matrix(eg.vectors.m.rightCols(n / 2), f)};
  return SplitModule{std::move(v), std::move(l)};
}

}  // namespace

TEST_SUITE("clifford") {

TEST_CASE("irreducible modules satisfy the relations exactly") {
  for (int d = 0; d <= 8; ++d) {
    CAPTURE(d);
    const SuperSpace m = irreducible_module(d, Field::Real);
    CHECK(m.degree() == d);
    CHECK(m.dim() == irrep_dim(d, Field::Real));
    CHECK(relations_residual(m) <= 1e-12);
  }
  for (int d = 0; d <= 6; ++d) {
    CAPTURE(d);
    const SuperSpace m = irreducible_module(d, Field::Complex);
    CHECK(m.dim() == irrep_dim(d, Field::Complex));
    CHECK(relations_residual(m) <= 1e-12);
  }
}

TEST_CASE("irreducible dimensions follow the doubling pattern") {
  // Real graded dimensions, degree 0..12.
  const Index real_dims[13] = {1, 2, 4, 8, 8, 16, 16, 16, 16, 32, 64, 128, 128};
  for (int d = 0; d <= 12; ++d) {
    CAPTURE(d);
    CHECK(irrep_dim(d, Field::Real) == real_dims[d]);
    CHECK(irrep_dim(d, Field::Complex) == (Index(1) << ((d + 1) / 2)));
    CHECK(irreducible_module(d, Field::Real).dim() == real_dims[d]);
  }
  // Class counts: two real classes at 0, 4 mod 8, two complex ones at even d.
  const int real_counts[8] = {2, 1, 1, 1, 2, 1, 1, 1};
  for (int d = 0; d <= 12; ++d) {
    CHECK(irrep_count(d, Field::Real) == real_counts[d % 8]);
    CHECK(irrep_count(d, Field::Complex) == (d % 2 == 0 ? 2 : 1));
  }
}

TEST_CASE("the two classes at two-class degrees are distinguished") {
  for (Field f : {Field::Real, Field::Complex}) {
    for (int d = 0; d <= (f == Field::Real ? 8 : 6); ++d) {
      if (irrep_count(d, f) != 2) continue;
      CAPTURE(d);
      CAPTURE(f == Field::Real);
      const auto dec0 = decompose_module(irreducible_module(d, f, 0));
      const auto dec1 = decompose_module(irreducible_module(d, f, 1));
      CHECK(dec0.mult == std::vector<long>{1, 0});
      CHECK(dec1.mult == std::vector<long>{0, 1});
    }
  }
  CHECK_THROWS_AS((void)irreducible_module(1, Field::Real, 1), Error);
  CHECK_THROWS_AS((void)irreducible_module(13, Field::Real), Error);
}

TEST_CASE("regular module decomposes with equal class multiplicities") {
  for (Field f : {Field::Real, Field::Complex}) {
    for (int d = 1; d <= 6; ++d) {
      CAPTURE(d);
      const SuperSpace reg = regular_module(d, f);
      CHECK(reg.dim() == (Index(1) << d));
      CHECK(relations_residual(reg) <= 1e-14);
      const auto dec = decompose_module(reg);
      CHECK(dec.mult_total * irrep_dim(d, f) == reg.dim());
      if (irrep_count(d, f) == 2) {
        // Left multiplication is class-balanced: the volume involution is
        // traceless on the regular module.
        CHECK(dec.mult[0] == dec.mult[1]);
      }
    }
  }
  const auto dec4 = decompose_module(regular_module(4, Field::Real));
  CHECK(dec4.mult == std::vector<long>{1, 1});
}

TEST_CASE("graded and ungraded constructions are linked") {
  // In a graded module the products e_d e_j preserve the even part and
  // generate the one-lower ungraded algebra there; check the relations of
  // those restrictions.
  for (int d = 2; d <= 8; ++d) {
    CAPTURE(d);
    const SuperSpace m = irreducible_module(d, Field::Real);
    const Index p = m.dim_plus();
    const auto& e = m.generators();
    std::vector<Matrix> f;
    for (int j = 0; j + 1 < d; ++j)
      f.push_back((e[d - 1] * e[j]).block(0, 0, p, p));
    const Matrix id = Matrix::identity(p, Field::Real);
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      worst = std::max(worst, max_abs(f[i] * f[i] + id));
      for (std::size_t j = i + 1; j < f.size(); ++j)
        worst = std::max(worst, max_abs(f[i] * f[j] + f[j] * f[i]));
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("index group table") {
  const IndexGroup real_groups[8] = {IndexGroup::Z,    IndexGroup::Z2, IndexGroup::Z2,
                                     IndexGroup::Zero, IndexGroup::Z,  IndexGroup::Zero,
                                     IndexGroup::Zero, IndexGroup::Zero};
  for (int d = 0; d <= 15; ++d) {
    CHECK(index_group(d, Field::Real) == real_groups[d % 8]);
    CHECK(index_group(d, Field::Complex) == (d % 2 == 0 ? IndexGroup::Z : IndexGroup::Zero));
  }
  CHECK(std::string(to_string(IndexGroup::Z)) == "Z");
  CHECK(std::string(to_string(IndexGroup::Z2)) == "Z/2");
  CHECK(std::string(to_string(IndexGroup::Zero)) == "0");
}

TEST_CASE("a Lagrangian has index zero in every degree") {
  for (Field f : {Field::Real, Field::Complex}) {
    for (int d = 0; d <= (f == Field::Real ? 7 : 5); ++d) {
      CAPTURE(d);
      CAPTURE(f == Field::Real);
      const SplitModule split = restricted_with_lagrangian(d, f);
      CHECK(classify(split.space, split.lagrangian).kind == LagKind::Lagrangian);
      CHECK(defect_module(split.space, split.lagrangian).dim() == 0);
      CHECK(sub_lagrangian_index(split.space, split.lagrangian).value == 0);
    }
  }
}

TEST_CASE("degree-zero index counts kernel dimensions of the graph") {
  Rng rng(402);
  for (Field f : {Field::Real, Field::Complex}) {
    for (int rep = 0; rep < 10; ++rep) {
      const Index p = 1 + static_cast<Index>(rng.uniform() * 4);
      const Index q = 1 + static_cast<Index>(rng.uniform() * 4);
      const Index r = static_cast<Index>(rng.uniform() * (std::min(p, q) + 1));
      CAPTURE(p);
      CAPTURE(q);
      CAPTURE(r);
      const SuperSpace v(p, q, f, 0);
      const Frame l = from_graph_isometry(random_partial_isometry(rng, v, r));
      const IndexClass c = sub_lagrangian_index(v, l);
      CHECK(c.group == IndexGroup::Z);
      // ker u has dim p - r, ker u^H has dim q - r.
      CHECK(c.value == (p - r) - (q - r));
      const SuperSpace defect = defect_module(v, l);
      CHECK(defect.dim_plus() == p - r);
      CHECK(defect.dim_minus() == q - r);
    }
  }
}

TEST_CASE("index is additive under direct sums") {
  Rng rng(403);
  const Field f = Field::Real;
  const SuperSpace v(3, 2, f, 0);
  const SuperSpace w(2, 3, f, 0);
  const Frame lv = from_graph_isometry(random_partial_isometry(rng, v, 1));
  const Frame lw = from_graph_isometry(random_partial_isometry(rng, w, 2));
  const DirectSum s = direct_sum(v, w);
  const Frame l{hcat(s.embed0 * lv.cols(), s.embed1 * lw.cols())};
  const IndexClass total = sub_lagrangian_index(s.space, l);
  const IndexClass expect = add(sub_lagrangian_index(v, lv), sub_lagrangian_index(w, lw));
  CHECK(total.value == expect.value);
  CHECK(total.value == (3 - 1) - (2 - 1) + (2 - 2) - (3 - 2));
}

TEST_CASE("Z/2 degrees: defect multiplicity mod two") {
  // Degree 1 real: the coefficient group is Z/2. An invariant isotropic
  // subspace with a one-irreducible defect has index 1; doubling it gives 0.
  const SuperSpace m = irreducible_module(1, Field::Real);  // dim (1|1)
  const SuperSpace d2 = irreducible_module(2, Field::Real);
  // Inside the degree-1 restriction of the degree-2 module, the zero
  // subspace of m has defect m itself: index 1.
  const SuperSpace m1(m.dim_plus(), m.dim_minus(), Field::Real, 1,
                      {m.generators()[0]});
  const Frame zero = Frame::zero_subspace(m.dim(), Field::Real);
  const IndexClass one = sub_lagrangian_index(m1, zero);
  CHECK(one.group == IndexGroup::Z2);
  CHECK(one.value == 1);
  // The same in the doubled module: defect has multiplicity 2, index 0.
  const SuperSpace dd(d2.dim_plus(), d2.dim_minus(), Field::Real, 1,
                      {d2.generators()[0]});
  const Frame zero2 = Frame::zero_subspace(d2.dim(), Field::Real);
  const IndexClass two = sub_lagrangian_index(dd, zero2);
  CHECK(two.value == 0);
  CHECK(add(one, one).value == 0);
  CHECK(add(one, two).value == 1);
}

TEST_CASE("non-isotropic and non-invariant inputs are rejected") {
  const SuperSpace m = irreducible_module(2, Field::Real);  // dim (2|2)
  // Not isotropic: a plus-axis vector.
  Matrix bad = Matrix::zero(4, 1, Field::Real);
  bad.m(0, 0) = 1.0;
  CHECK_THROWS_AS((void)sub_lagrangian_index(m, Frame(bad)), Error);
  // Isotropic but not invariant: (e_+ , e_-)/sqrt(2) generically fails.
  Matrix tilt = Matrix::zero(4, 1, Field::Real);
  tilt.m(0, 0) = 1.0 / std::sqrt(2.0);
  tilt.m(2, 0) = 1.0 / std::sqrt(2.0);
  bool invariant_ok = true;
  try {
    (void)sub_lagrangian_index(m, Frame(tilt));
  } catch (const Error& e) {
    invariant_ok = false;
    CHECK(e.code() == Errc::not_invariant);
  }
  CHECK_FALSE(invariant_ok);
}

TEST_CASE("index class arithmetic guards mismatched groups") {
  IndexClass a;
  a.degree = 1;
  a.field = Field::Real;
  a.group = IndexGroup::Z2;
  a.value = 1;
  IndexClass b = a;
  b.degree = 2;
  CHECK_THROWS_AS((void)add(a, b), Error);
}

}  // TEST_SUITE
