#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagcat/composition.hpp"

namespace lagcat {

// --- exact diagonal tails ---------------------------------------------------
//
// The structured model works on the sequence space over the integer modes,
// with the grading exchanging the modes n and -n. Operators are "finite dense
// core plus exactly diagonal tail"; the tail entries come from a deliberately
// tiny closed-form grammar so that Hilbert-Schmidt membership and closedness
// of compositions are decidable exactly from the parameters, instead of being
// vacuously true at any finite truncation.
//
// Grammar (entry at mode n):
//   Zero      0
//   Const     c
//   Exp       c * exp(alpha * n)          (alpha != 0; alpha = 0 is Const)
//   ApsExp    c * exp(-ell * (n + 1/2))
// Zero/Const/Exp are read over all integers; ApsExp is a one-sided family
// (n >= 0) used for half-integer spectra, with the half shift built into the
// grammar. All parameters are real.

enum class TailKind { Zero, Const, Exp, ApsExp };

const char* to_string(TailKind k);

struct TailSymbol {
  TailKind kind = TailKind::Zero;
  double amplitude = 0.0;  // c
  double rate = 0.0;       // alpha (Exp) or ell (ApsExp); 0 otherwise

  static TailSymbol zero();
  static TailSymbol constant(double c);
  // alpha = 0 normalizes to Const(c) so that symbol identities (e.g. a
  // composition landing on the identity) are exact, not approximate.
  static TailSymbol exponential(double c, double alpha);
  static TailSymbol aps_exponential(double c, double ell);

  double value_at(long n) const;  // two-sided evaluation of the closed form
};

// Exact parameter equality: symbols are closed-form data, so equality is
// literal (same kind, same numbers), never a tolerance comparison.
bool operator==(const TailSymbol& a, const TailSymbol& b);
inline bool operator!=(const TailSymbol& a, const TailSymbol& b) { return !(a == b); }

// True iff the squared entries sum finitely over the symbol's support:
// Zero always; Const/Exp only when c = 0 (two-sided divergence); ApsExp when
// ell > 0 or c = 0 (geometric series over n >= 0).
bool is_hilbert_schmidt(const TailSymbol& t);

// Certified entrywise domination |a_n| <= |b_n| over the common support.
// Decidable for same-support pairs (two-sided vs two-sided needs equal rates;
// one-sided ApsExp pairs compare rate and the n = 0 value); returns false
// when domination cannot be certified from the parameters.
bool dominated_by(const TailSymbol& a, const TailSymbol& b);

// Pointwise product when it stays inside the grammar (Exp rates add, ApsExp
// rates add, Const multiplies amplitudes); nullopt when it leaves it
// (mixing ApsExp with Exp would need inexact parameter conversion).
std::optional<TailSymbol> multiply(const TailSymbol& a, const TailSymbol& b);

// --- structured operators ---------------------------------------------------

// Finite dense block on the modes |n| <= band plus the symbolic diagonal at
// |n| > band. Mode n is row/column n + band of the core.
struct StructuredOp {
  Index band = 0;
  Matrix core;
  TailSymbol tail;

  StructuredOp(Index band, Matrix core, TailSymbol tail);

  // Diagonal entry at any mode, reading the core inside the band and the
  // symbol outside. Off-diagonal structure (if any) lives only in the core.
  double entry(long n) const;
};

// Exact: the tail decides; the finite core never matters.
bool is_hilbert_schmidt(const StructuredOp& op);

// The diagonal multiplication operator with entries t(n) everywhere.
StructuredOp diagonal_op(const TailSymbol& t, Index band = 0);

// The canonical multiplication operator with entries exp(alpha n).
StructuredOp t_alpha(double alpha);

// --- structured graph Lagrangians -------------------------------------------

// The graph of a diagonal StructuredOp as a correspondence from the sequence
// space to itself. Construction validates that the graph is a Lagrangian:
//   - the core is exactly diagonal with nonvanishing entries (invalid_value),
//   - the tail has nonvanishing entries (invalid_value),
//   - the pairing condition t(n) t(-n) = 1 holds, exactly on the symbol
//     parameters for the tail and within 1e-12 on the core (not_isotropic).
class StructuredLagrangian {
 public:
  explicit StructuredLagrangian(StructuredOp op, const Tolerances& tol = {});

  const StructuredOp& op() const { return op_; }

 private:
  StructuredOp op_;
};

enum class Closure { Lagrangian, NotClosed };

const char* to_string(Closure c);

// Composite of two structured graphs, `first` applied first. The product of
// the diagonal symbols is always computable; whether its graph equals the
// composite (rather than properly containing it) is decided from the
// effective decay rates: the composite is closed iff the rates do not have
// strictly opposite signs. `closure` always carries graph(product symbol),
// which is the closure of the composite in both cases.
struct StructuredComposeResult {
  Closure status = Closure::Lagrangian;
  StructuredLagrangian closure;
  std::string diagnosis;  // nonempty iff NotClosed, names the failure mode
};

// Errors with unsupported_symbols when the product symbol leaves the grammar.
StructuredComposeResult compose_structured(const StructuredLagrangian& first,
                                           const StructuredLagrangian& second,
                                           const Tolerances& tol = {});

// --- dense truncations --------------------------------------------------------

// The truncation to modes |n| <= N as a super space: the grading eigenbasis
// is e_0 and (e_n +- e_{-n})/sqrt(2) for n = 1..N, plus-first, so the space
// has signature (N+1 | N).
SuperSpace truncated_space(Index n_max, Field f);

// The orthogonal change of basis from the grading eigenbasis to the mode
// basis: column order e_0, v_1^+ .. v_N^+, v_1^- .. v_N^-; row n + N is
// mode n.
Matrix eigenbasis_in_modes(Index n_max, Field f);

// Dense matrix of the operator on modes |n| <= N (mode basis; row n + N).
// Requires n_max >= band.
Matrix truncate_op(const StructuredOp& op, Index n_max);

// The same operator conjugated into the grading eigenbasis, the form that
// graph/Lagrangian predicates consume.
Matrix truncate_in_eigenbasis(const StructuredOp& op, Index n_max);

// The truncated graph as a correspondence from truncated_space(N) to itself.
// Built directly from the exact per-pair hyperbolic form of the graph
// unitary, which is perfectly conditioned for every truncation even when the
// operator entries themselves over/underflow a Lagrangian-graph check.
Correspondence truncate_graph(const StructuredLagrangian& l, Index n_max,
                              const Tolerances& tol = {});

// Smallest raw singular value of the composition middle operator
// 1 - u00(second) u11(first) on the truncated plus space; the quantity whose
// decay to zero witnesses a closed-range failure in dense truncations.
double middle_smallest_sv(const Correspondence& first, const Correspondence& second);

// --- counterexample report ----------------------------------------------------

// One ladder row of the dense cross-check of a structured composition.
struct LadderRow {
  Index n_max = 0;
  double middle_sv = 0.0;        // smallest singular value of 1 - v11 u11
  double dense_vs_symbol = 0.0;  // subspace distance to the truncated closure
                                 // (only meaningful in the closed case; 0 otherwise)
};

// Structured verdict for graph(T_a1) ∘ graph(T_a2) together with the dense
// truncation ladder that witnesses it.
struct CounterexampleReport {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  Closure status = Closure::Lagrangian;
  TailSymbol product;
  std::string diagnosis;
  std::vector<LadderRow> ladder;
};

CounterexampleReport counterexample_report(double alpha1, double alpha2,
                                           const std::vector<Index>& ladder,
                                           const Tolerances& tol = {});

}  // namespace lagcat
