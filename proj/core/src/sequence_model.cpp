#include "lagcat/sequence_model.hpp"

#include <cmath>
#include <string>

#include "lagcat/linalg.hpp"

namespace lagcat {

namespace {
// Admissibility of the Lagrangian pairing t(n) t(-n) = 1 on numeric entries;
// symbol-level conditions are checked exactly on the parameters instead.
constexpr double kPairingTol = 1e-12;
}  // namespace

const char* to_string(TailKind k) {
  switch (k) {
    case TailKind::Zero: return "zero";
    case TailKind::Const: return "const";
    case TailKind::Exp: return "exp";
    case TailKind::ApsExp: return "aps_exp";
  }
  return "?";
}

TailSymbol TailSymbol::zero() { return TailSymbol{TailKind::Zero, 0.0, 0.0}; }

TailSymbol TailSymbol::constant(double c) {
  if (c == 0.0) return zero();
  return TailSymbol{TailKind::Const, c, 0.0};
}

TailSymbol TailSymbol::exponential(double c, double alpha) {
  if (c == 0.0) return zero();
  if (alpha == 0.0) return constant(c);
  return TailSymbol{TailKind::Exp, c, alpha};
}

TailSymbol TailSymbol::aps_exponential(double c, double ell) {
  if (c == 0.0) return zero();
  return TailSymbol{TailKind::ApsExp, c, ell};
}

double TailSymbol::value_at(long n) const {
  switch (kind) {
    case TailKind::Zero: return 0.0;
    case TailKind::Const: return amplitude;
    case TailKind::Exp: return amplitude * std::exp(rate * static_cast<double>(n));
    case TailKind::ApsExp:
      return amplitude * std::exp(-rate * (static_cast<double>(n) + 0.5));
  }
  return 0.0;
}

bool operator==(const TailSymbol& a, const TailSymbol& b) {
  return a.kind == b.kind && a.amplitude == b.amplitude && a.rate == b.rate;
}

bool is_hilbert_schmidt(const TailSymbol& t) {
  switch (t.kind) {
    case TailKind::Zero: return true;
    case TailKind::Const:
    case TailKind::Exp: return t.amplitude == 0.0;  // two-sided sum diverges otherwise
    case TailKind::ApsExp: return t.amplitude == 0.0 || t.rate > 0.0;
  }
  return false;
}

bool dominated_by(const TailSymbol& a, const TailSymbol& b) {
  if (a.kind == TailKind::Zero) return true;
  if (b.kind == TailKind::Zero) return false;
  const bool a_two_sided = a.kind != TailKind::ApsExp;
  const bool b_two_sided = b.kind != TailKind::ApsExp;
  if (a_two_sided != b_two_sided) return false;  // incomparable supports
  if (a_two_sided) {
    const double ra = a.kind == TailKind::Exp ? a.rate : 0.0;
    const double rb = b.kind == TailKind::Exp ? b.rate : 0.0;
    return ra == rb && std::abs(a.amplitude) <= std::abs(b.amplitude);
  }
  // One-sided (n >= 0): compare decay rates and the n = 0 values.
  return a.rate >= b.rate &&
         std::abs(a.amplitude) * std::exp(-a.rate / 2.0) <=
             std::abs(b.amplitude) * std::exp(-b.rate / 2.0);
}

std::optional<TailSymbol> multiply(const TailSymbol& a, const TailSymbol& b) {
  if (a.kind == TailKind::Zero || b.kind == TailKind::Zero) return TailSymbol::zero();
  const bool a_aps = a.kind == TailKind::ApsExp;
  const bool b_aps = b.kind == TailKind::ApsExp;
  if (a_aps && b_aps)
    return TailSymbol::aps_exponential(a.amplitude * b.amplitude, a.rate + b.rate);
  if (a_aps || b_aps) {
    const TailSymbol& aps = a_aps ? a : b;
    const TailSymbol& other = a_aps ? b : a;
    if (other.kind == TailKind::Const)
      return TailSymbol::aps_exponential(aps.amplitude * other.amplitude, aps.rate);
    return std::nullopt;  // ApsExp * Exp needs an inexact parameter shift
  }
  const double ra = a.kind == TailKind::Exp ? a.rate : 0.0;
  const double rb = b.kind == TailKind::Exp ? b.rate : 0.0;
  return TailSymbol::exponential(a.amplitude * b.amplitude, ra + rb);
}

StructuredOp::StructuredOp(Index band_, Matrix core_, TailSymbol tail_)
    : band(band_), core(std::move(core_)), tail(tail_) {
  require(band >= 0, Errc::invalid_value, "band radius must be nonnegative");
  require(core.rows() == 2 * band + 1 && core.cols() == core.rows(),
          Errc::dimension_mismatch,
          "core must be square on the modes |n| <= band (size 2 band + 1)");
}

double StructuredOp::entry(long n) const {
  if (std::abs(n) <= band) {
    const Index i = static_cast<Index>(n + band);
    return core.m(i, i).real();
  }
  return tail.value_at(n);
}

bool is_hilbert_schmidt(const StructuredOp& op) { return is_hilbert_schmidt(op.tail); }

StructuredOp diagonal_op(const TailSymbol& t, Index band) {
  const Index n = 2 * band + 1;
  Dense core = Dense::Zero(n, n);
  for (long k = -band; k <= static_cast<long>(band); ++k)
    core(k + band, k + band) = t.value_at(k);
  return StructuredOp(band, Matrix(std::move(core), Field::Real), t);
}

StructuredOp t_alpha(double alpha) {
  return diagonal_op(TailSymbol::exponential(1.0, alpha), 0);
}

namespace {

double symbol_pairing_defect(const TailSymbol& t) {
  switch (t.kind) {
    case TailKind::Zero: return 1.0;  // vanishing entries: maximally bad
    case TailKind::Const:
    case TailKind::Exp: return std::abs(t.amplitude * t.amplitude - 1.0);
    case TailKind::ApsExp:
      // t(n) t(-n) = c^2 exp(-ell (n + 1/2)) exp(-ell (-n + 1/2)) = c^2 e^{-ell}
      return std::abs(t.amplitude * t.amplitude * std::exp(-t.rate) - 1.0);
  }
  return 1.0;
}

}  // namespace

StructuredLagrangian::StructuredLagrangian(StructuredOp op, const Tolerances& tol)
    : op_(std::move(op)) {
  (void)tol;
  const Index n = op_.core.rows();
  Dense offdiag = op_.core.m;
  offdiag.diagonal().setZero();
  require(offdiag.cwiseAbs().maxCoeff() == 0.0, Errc::invalid_value,
          "graph Lagrangians require an exactly diagonal core");
  require(op_.core.m.diagonal().imag().cwiseAbs().maxCoeff() == 0.0, Errc::invalid_value,
          "graph Lagrangians require real diagonal entries");
  require(op_.tail.kind != TailKind::Zero, Errc::invalid_value,
          "graph Lagrangians require nonvanishing tail entries");
  for (Index i = 0; i < n; ++i)
    require(op_.core.m(i, i) != 0.0, Errc::invalid_value,
            "graph Lagrangians require nonvanishing diagonal entries");
  require(symbol_pairing_defect(op_.tail) <= kPairingTol, Errc::not_isotropic,
          "tail symbol violates the pairing t(n) t(-n) = 1; the graph is not Lagrangian");
  for (long k = 0; k <= static_cast<long>(op_.band); ++k) {
    const double defect = std::abs(op_.entry(k) * op_.entry(-k) - 1.0);
    require(defect <= kPairingTol, Errc::not_isotropic,
            "core entries violate the pairing t(n) t(-n) = 1 at mode " + std::to_string(k));
  }
}

const char* to_string(Closure c) {
  return c == Closure::Lagrangian ? "lagrangian" : "not_closed";
}

namespace {

double effective_rate(const TailSymbol& t) {
  switch (t.kind) {
    case TailKind::Exp: return t.rate;
    case TailKind::ApsExp: return -t.rate;
    default: return 0.0;
  }
}

}  // namespace

StructuredComposeResult compose_structured(const StructuredLagrangian& first,
                                           const StructuredLagrangian& second,
                                           const Tolerances& tol) {
  const StructuredOp& a = first.op();
  const StructuredOp& b = second.op();
  const auto product_tail = multiply(a.tail, b.tail);
  require(product_tail.has_value(), Errc::unsupported_symbols,
          "product of the tail symbols leaves the closed-form grammar");
  const Index band = std::max(a.band, b.band);
  const Index n = 2 * band + 1;
  Dense core = Dense::Zero(n, n);
  for (long k = -band; k <= static_cast<long>(band); ++k)
    core(k + band, k + band) = a.entry(k) * b.entry(k);
  StructuredLagrangian closure(
      StructuredOp(band, Matrix(std::move(core), Field::Real), *product_tail), tol);

  const double ra = effective_rate(a.tail);
  const double rb = effective_rate(b.tail);
  if (ra * rb < 0.0) {
    const TailSymbol& p = *product_tail;
    std::string diagnosis =
        (p.kind == TailKind::Const && p.amplitude == 1.0)
            ? "composition \xE2\x8A\x82 identity, not everywhere defined"
            : "composition \xE2\x8A\x82 graph of the product operator, not everywhere "
              "defined (opposite decay rates: the product's natural domain is a proper "
              "dense subspace)";
    return StructuredComposeResult{Closure::NotClosed, std::move(closure),
                                   std::move(diagnosis)};
  }
  return StructuredComposeResult{Closure::Lagrangian, std::move(closure), ""};
}

SuperSpace truncated_space(Index n_max, Field f) {
  require(n_max >= 0, Errc::invalid_value, "truncation bound must be nonnegative");
  return SuperSpace(n_max + 1, n_max, f, 0);
}

Matrix eigenbasis_in_modes(Index n_max, Field f) {
  const Index dim = 2 * n_max + 1;
  const double r = 1.0 / std::sqrt(2.0);
  Dense e = Dense::Zero(dim, dim);
  e(n_max, 0) = 1.0;  // e_0
  for (Index k = 1; k <= n_max; ++k) {
    e(n_max + k, k) = r;  // v_k^+ = (e_k + e_{-k})/sqrt(2)
    e(n_max - k, k) = r;
    e(n_max + k, n_max + k) = r;  // v_k^- = (e_k - e_{-k})/sqrt(2)
    e(n_max - k, n_max + k) = -r;
  }
  return Matrix(std::move(e), f);
}

Matrix truncate_op(const StructuredOp& op, Index n_max) {
  require(n_max >= op.band, Errc::invalid_value,
          "truncation must not cut into the dense core");
  const Index dim = 2 * n_max + 1;
  Dense t = Dense::Zero(dim, dim);
  t.block(n_max - op.band, n_max - op.band, op.core.rows(), op.core.cols()) = op.core.m;
  for (long k = static_cast<long>(op.band) + 1; k <= static_cast<long>(n_max); ++k) {
    t(n_max + k, n_max + k) = op.tail.value_at(k);
    t(n_max - k, n_max - k) = op.tail.value_at(-k);
  }
  return Matrix(std::move(t), op.core.field);
}

Matrix truncate_in_eigenbasis(const StructuredOp& op, Index n_max) {
  const Matrix e = eigenbasis_in_modes(n_max, op.core.field);
  return e.adjoint() * truncate_op(op, n_max) * e;
}

Correspondence truncate_graph(const StructuredLagrangian& l, Index n_max,
                              const Tolerances& tol) {
  const StructuredOp& op = l.op();
  require(n_max >= op.band, Errc::invalid_value,
          "truncation must not cut into the dense core");
  const Field f = op.core.field;
  const Index p = n_max + 1;  // e_0, v_1^+ .. v_N^+
  const Index q = n_max;      // v_1^- .. v_N^-
  Dense u = Dense::Zero(p + q, p + q);
  // Column layout: a in V0- (q columns), then b in V1+ (p columns);
  // row layout: V0+ (p rows), then V1- (q rows).
  u(0, q) = 1.0 / op.entry(0);  // zero mode: b = t_0 x0+, no minus component
  for (Index k = 1; k <= n_max; ++k) {
    const double t = op.entry(k);
    const double ti = op.entry(-k);
    const double c = (t + ti) / 2.0;  // pair block of the operator is [[c,s],[s,c]]
    const double s = (t - ti) / 2.0;  // with c^2 - s^2 = t * t(-k) = 1
    u(k, k - 1) = -s / c;             // u00: v_k^- -> v_k^+
    u(k, q + k) = 1.0 / c;            // u01: v_k^+ -> v_k^+
    u(p + (k - 1), k - 1) = 1.0 / c;  // u10: v_k^- -> v_k^-
    u(p + (k - 1), q + k) = s / c;    // u11: v_k^+ -> v_k^-
  }
  const SuperSpace v = truncated_space(n_max, f);
  return Correspondence(v, v, Matrix(std::move(u), f), tol);
}

double middle_smallest_sv(const Correspondence& first, const Correspondence& second) {
  require(first.target().same_signature(second.source()), Errc::space_mismatch,
          "middle spaces do not match");
  const Matrix m =
      Matrix::identity(first.target().dim_plus(), first.u().field) -
      second.u00() * first.u11();
  return sv_min(m);
}

CounterexampleReport counterexample_report(double alpha1, double alpha2,
                                           const std::vector<Index>& ladder,
                                           const Tolerances& tol) {
  const StructuredLagrangian first{t_alpha(alpha2)};   // applied first
  const StructuredLagrangian second{t_alpha(alpha1)};  // applied second
  const StructuredComposeResult composed = compose_structured(first, second, tol);

  CounterexampleReport rep;
  rep.alpha1 = alpha1;
  rep.alpha2 = alpha2;
  rep.status = composed.status;
  rep.product = composed.closure.op().tail;
  rep.diagnosis = composed.diagnosis;
  for (Index n : ladder) {
    const Correspondence d1 = truncate_graph(first, n, tol);
    const Correspondence d2 = truncate_graph(second, n, tol);
    LadderRow row;
    row.n_max = n;
    row.middle_sv = middle_smallest_sv(d1, d2);
    if (composed.status == Closure::Lagrangian) {
      const ComposeResult dense = compose_formula(d1, d2, tol);
      const Correspondence expect = truncate_graph(composed.closure, n, tol);
      row.dense_vs_symbol = subspace_distance(dense.corr.frame(), expect.frame());
    }
    rep.ladder.push_back(row);
  }
  return rep;
}

}  // namespace lagcat
