#include <doctest.h>

#include <cmath>
#include <vector>

#include "lagcat/sequence_model.hpp"

using namespace lagcat;

TEST_SUITE("sequence_model") {

TEST_CASE("tail symbols evaluate their closed forms") {
  const TailSymbol e = TailSymbol::exponential(2.0, 0.5);
  CHECK(e.value_at(0) == 2.0);
  CHECK(e.value_at(3) == doctest::Approx(2.0 * std::exp(1.5)).epsilon(1e-15));
  CHECK(e.value_at(-2) == doctest::Approx(2.0 * std::exp(-1.0)).epsilon(1e-15));
  const TailSymbol a = TailSymbol::aps_exponential(1.0, 0.8);
  CHECK(a.value_at(0) == doctest::Approx(std::exp(-0.4)).epsilon(1e-15));
  CHECK(a.value_at(4) == doctest::Approx(std::exp(-0.8 * 4.5)).epsilon(1e-15));
  CHECK(TailSymbol::constant(3.0).value_at(17) == 3.0);
  CHECK(TailSymbol::zero().value_at(5) == 0.0);
}

TEST_CASE("factories canonicalize degenerate parameters") {
  CHECK(TailSymbol::exponential(1.0, 0.0) == TailSymbol::constant(1.0));
  CHECK(TailSymbol::constant(0.0) == TailSymbol::zero());
  CHECK(TailSymbol::exponential(0.0, 1.0) == TailSymbol::zero());
  CHECK(TailSymbol::aps_exponential(0.0, 1.0) == TailSymbol::zero());
  // ApsExp keeps its grammar tag even at rate 0 (the one-sided support
  // matters for summability semantics).
  CHECK(TailSymbol::aps_exponential(2.0, 0.0).kind == TailKind::ApsExp);
}

TEST_CASE("square-summability is decided exactly from the parameters") {
  CHECK(is_hilbert_schmidt(TailSymbol::zero()));
  CHECK_FALSE(is_hilbert_schmidt(TailSymbol::constant(0.3)));
  CHECK_FALSE(is_hilbert_schmidt(TailSymbol::exponential(1.0, 0.7)));
  CHECK_FALSE(is_hilbert_schmidt(TailSymbol::exponential(1.0, -0.7)));
  CHECK(is_hilbert_schmidt(TailSymbol::aps_exponential(5.0, 0.1)));
  CHECK_FALSE(is_hilbert_schmidt(TailSymbol::aps_exponential(5.0, 0.0)));
  CHECK_FALSE(is_hilbert_schmidt(TailSymbol::aps_exponential(5.0, -0.1)));
  // The core block never matters.
  Dense big = Dense::Identity(5, 5) * 1e9;
  const StructuredOp op(2, Matrix(big, Field::Real), TailSymbol::aps_exponential(1.0, 1.0));
  CHECK(is_hilbert_schmidt(op));
  const StructuredOp bad(2, Matrix(Dense::Identity(5, 5) * 1e-9, Field::Real),
                         TailSymbol::constant(1e-9));
  CHECK_FALSE(is_hilbert_schmidt(bad));
}

TEST_CASE("summability is monotone under certified domination") {
  const std::vector<TailSymbol> symbols = {
      TailSymbol::zero(),
      TailSymbol::constant(0.5),
      TailSymbol::constant(2.0),
      TailSymbol::exponential(1.0, 0.3),
      TailSymbol::exponential(0.25, 0.3),
      TailSymbol::exponential(1.0, -0.3),
      TailSymbol::aps_exponential(1.0, 0.5),
      TailSymbol::aps_exponential(3.0, 0.5),
      TailSymbol::aps_exponential(1.0, 1.5),
      TailSymbol::aps_exponential(2.0, 0.0),
  };
  for (const TailSymbol& a : symbols)
    for (const TailSymbol& b : symbols)
      if (dominated_by(a, b) && is_hilbert_schmidt(b)) CHECK(is_hilbert_schmidt(a));
  // Spot checks of the certification itself.
  CHECK(dominated_by(TailSymbol::exponential(0.25, 0.3), TailSymbol::exponential(1.0, 0.3)));
  CHECK_FALSE(dominated_by(TailSymbol::exponential(1.0, 0.3), TailSymbol::exponential(1.0, 0.31)));
  CHECK(dominated_by(TailSymbol::aps_exponential(1.0, 1.5), TailSymbol::aps_exponential(1.0, 0.5)));
  CHECK_FALSE(dominated_by(TailSymbol::aps_exponential(3.0, 0.5), TailSymbol::aps_exponential(1.0, 0.5)));
  CHECK(dominated_by(TailSymbol::zero(), TailSymbol::aps_exponential(1.0, 0.5)));
}

TEST_CASE("symbol products stay exact inside the grammar") {
  const auto p = multiply(TailSymbol::exponential(1.0, 0.4), TailSymbol::exponential(1.0, 0.6));
  REQUIRE(p.has_value());
  CHECK(*p == TailSymbol::exponential(1.0, 1.0));
  // Opposite rates cancel to the exact constant.
  const auto q = multiply(TailSymbol::exponential(1.0, 0.4), TailSymbol::exponential(1.0, -0.4));
  REQUIRE(q.has_value());
  CHECK(*q == TailSymbol::constant(1.0));
  // ApsExp rates add exactly (the gluing identity).
  const auto r = multiply(TailSymbol::aps_exponential(1.0, 0.5), TailSymbol::aps_exponential(1.0, 0.7));
  REQUIRE(r.has_value());
  CHECK(*r == TailSymbol::aps_exponential(1.0, 1.2));
  // Mixing the one-sided and two-sided exponential families is refused.
  CHECK_FALSE(multiply(TailSymbol::aps_exponential(1.0, 0.5), TailSymbol::exponential(1.0, 0.5)).has_value());
  CHECK(multiply(TailSymbol::zero(), TailSymbol::exponential(1.0, 1.0)) == TailSymbol::zero());
}

TEST_CASE("structured graph validation") {
  CHECK_NOTHROW((void)StructuredLagrangian(t_alpha(0.7)));
  CHECK_NOTHROW((void)StructuredLagrangian(t_alpha(0.0)));
  // Vanishing entries are rejected.
  CHECK_THROWS_WITH_AS((void)StructuredLagrangian(diagonal_op(TailSymbol::zero())),
                       doctest::Contains("nonvanishing"), Error);
  Dense zero_core = Dense::Zero(1, 1);
  CHECK_THROWS_AS((void)StructuredLagrangian(StructuredOp(
                      0, Matrix(zero_core, Field::Real), TailSymbol::exponential(1.0, 1.0))),
                  Error);
  // Non-diagonal cores are rejected.
  Dense full = Dense::Ones(3, 3);
  CHECK_THROWS_AS((void)StructuredLagrangian(StructuredOp(
                      1, Matrix(full, Field::Real), TailSymbol::exponential(1.0, 1.0))),
                  Error);
  // Pairing violations (graph not Lagrangian) are rejected with not_isotropic.
  try {
    (void)StructuredLagrangian(diagonal_op(TailSymbol::constant(2.0)));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_isotropic);
  }
  // An ApsExp diagonal with the matching amplitude does satisfy the pairing.
  const double ell = 0.8;
  CHECK_NOTHROW((void)StructuredLagrangian(
      diagonal_op(TailSymbol::aps_exponential(std::exp(ell / 2.0), ell))));
}

TEST_CASE("same-sign structured composition is the exact product graph") {
  const StructuredLagrangian a{t_alpha(0.4)};
  const StructuredLagrangian b{t_alpha(1.1)};
  const StructuredComposeResult r = compose_structured(a, b);
  CHECK(r.status == Closure::Lagrangian);
  CHECK(r.diagnosis.empty());
  CHECK(r.closure.op().tail == TailSymbol::exponential(1.0, 1.5));
  // Identity compositions are exact as well.
  const StructuredLagrangian id{t_alpha(0.0)};
  CHECK(compose_structured(id, id).closure.op().tail == TailSymbol::constant(1.0));
  CHECK(compose_structured(id, a).closure.op().tail == TailSymbol::exponential(1.0, 0.4));
  // Both negative is also closed.
  CHECK(compose_structured(StructuredLagrangian{t_alpha(-0.3)},
                           StructuredLagrangian{t_alpha(-0.9)})
            .status == Closure::Lagrangian);
}

TEST_CASE("opposite-sign structured composition is not closed") {
  const StructuredLagrangian a{t_alpha(-1.0)};
  const StructuredLagrangian b{t_alpha(1.0)};
  const StructuredComposeResult r = compose_structured(a, b);
  CHECK(r.status == Closure::NotClosed);
  CHECK(r.closure.op().tail == TailSymbol::constant(1.0));  // closure = identity graph
  CHECK(r.diagnosis == "composition \xE2\x8A\x82 identity, not everywhere defined");
  const StructuredComposeResult s =
      compose_structured(StructuredLagrangian{t_alpha(-0.5)}, StructuredLagrangian{t_alpha(2.0)});
  CHECK(s.status == Closure::NotClosed);
  CHECK(s.closure.op().tail == TailSymbol::exponential(1.0, 1.5));
  CHECK(s.diagnosis.find("not everywhere defined") != std::string::npos);
}

TEST_CASE("dense truncation in the mode basis") {
  const StructuredOp op = t_alpha(0.5);
  const Matrix t = truncate_op(op, 3);
  CHECK(t.rows() == 7);
  for (long n = -3; n <= 3; ++n)
    CHECK(t.m(n + 3, n + 3).real() == doctest::Approx(std::exp(0.5 * n)).epsilon(1e-15));
  // The eigenbasis transform is orthogonal and sorts the grading.
  const Matrix e = eigenbasis_in_modes(3, Field::Real);
  CHECK(hs_norm(e.adjoint() * e - Matrix::identity(7, Field::Real)) <= 1e-14);
  Dense rev = Dense::Zero(7, 7);
  for (Index i = 0; i < 7; ++i) rev(6 - i, i) = 1.0;  // the grading in mode basis
  const Matrix gamma_eig = e.adjoint() * Matrix(rev, Field::Real) * e;
  CHECK(hs_norm(gamma_eig - truncated_space(3, Field::Real).gamma()) <= 1e-14);
}

TEST_CASE("truncated graphs are Lagrangian graphs") {
  const StructuredLagrangian l{t_alpha(0.5)};
  const SuperSpace v = truncated_space(8, Field::Real);
  const Matrix t_eig = truncate_in_eigenbasis(l.op(), 8);
  CHECK(is_lagrangian_graph(v, v, t_eig));
  // The identity truncates to a diagonal Lagrangian.
  CHECK(is_lagrangian_graph(v, v, truncate_in_eigenbasis(t_alpha(0.0), 8)));
  // The directly assembled graph correspondence matches the T route.
  const Correspondence c = truncate_graph(l, 8);
  const Matrix t_from_u = u_to_T(c);
  CHECK(hs_norm(t_from_u - t_eig) <= 1e-9 * hs_norm(t_eig));
}

TEST_CASE("truncated same-sign composition matches the truncated product") {
  const StructuredLagrangian a{t_alpha(0.4)};
  const StructuredLagrangian b{t_alpha(0.9)};
  const StructuredComposeResult r = compose_structured(a, b);
  REQUIRE(r.status == Closure::Lagrangian);
  for (Index n : {4, 8, 12}) {
    const Correspondence da = truncate_graph(a, n);
    const Correspondence db = truncate_graph(b, n);
    const ComposeResult dense = compose_formula(da, db);
    CHECK_FALSE(dense.used_fallback);
    const Correspondence expect = truncate_graph(r.closure, n);
    CHECK(subspace_distance(dense.corr.frame(), expect.frame()) <= 1e-10);
    // Brute force agrees too.
    const Correspondence brute = compose_bruteforce(da, db);
    CHECK(subspace_distance(brute.frame(), expect.frame()) <= 1e-10);
  }
}

TEST_CASE("middle operator singular values witness the closed-range dichotomy") {
  const StructuredLagrangian pos{t_alpha(1.0)};
  const StructuredLagrangian neg{t_alpha(-1.0)};
  double prev = 1.0;
  for (Index n : {8, 16}) {
    // Opposite sign: 1 - v11 u11 = diag(sech^2) over the pair modes; its
    // smallest singular value decays like 4 e^{-2n}.
    const double sv = middle_smallest_sv(truncate_graph(neg, n), truncate_graph(pos, n));
    const double predicted = 1.0 / std::pow(std::cosh(static_cast<double>(n)), 2);
    CHECK(sv == doctest::Approx(predicted).epsilon(1e-9));
    CHECK(sv < prev * std::exp(-1.0 * 8));  // at least e^{|alpha| dN} decay
    prev = sv;
    // Same sign: bounded below by 1.
    const double sv_same =
        middle_smallest_sv(truncate_graph(pos, n), truncate_graph(pos, n));
    CHECK(sv_same >= 1.0);
  }
}

TEST_CASE("counterexample report aggregates structured and dense evidence") {
  const CounterexampleReport bad = counterexample_report(1.0, -1.0, {8, 16});
  CHECK(bad.status == Closure::NotClosed);
  CHECK(bad.product == TailSymbol::constant(1.0));
  CHECK(bad.diagnosis.find("identity") != std::string::npos);
  REQUIRE(bad.ladder.size() == 2);
  CHECK(bad.ladder[0].middle_sv == doctest::Approx(std::pow(1.0 / std::cosh(8.0), 2)).epsilon(1e-9));
  CHECK(bad.ladder[1].middle_sv <= bad.ladder[0].middle_sv * std::exp(-8.0));

  const CounterexampleReport good = counterexample_report(0.7, 0.2, {8, 16});
  CHECK(good.status == Closure::Lagrangian);
  CHECK(good.product == TailSymbol::exponential(1.0, 0.7 + 0.2));
  for (const LadderRow& row : good.ladder) {
    CHECK(row.middle_sv >= 0.5);
    CHECK(row.dense_vs_symbol <= 1e-9);
  }
}

}  // TEST_SUITE
