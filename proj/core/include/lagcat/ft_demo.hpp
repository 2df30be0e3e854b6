#pragma once

#include <string>
#include <vector>

#include "lagcat/composition.hpp"
#include "lagcat/sequence_model.hpp"

namespace lagcat {

// ---------------------------------------------------------------------------
// Truncated spectral model of a two-dimensional fermionic field theory on
// circles and product bordisms. A boundary circle enters only through its
// Dirac spectral data: a discrete real spectrum, symmetric under the grading
// flip lambda -> -lambda, with finite multiplicities. Bordisms (cylinders,
// half-discs, thin identities) act through solution operators that are
// exactly diagonal in the Dirac eigenbasis, so the gluing law for their
// boundary-value Lagrangians can be checked without any discretization error
// masking it.
// ---------------------------------------------------------------------------

// The two spectral families ("spin structures") of the model:
//   HalfInteger: lambda_n = n + 1/2, n in Z. The flip pairs n <-> -n-1 and
//                the spectrum has no kernel.
//   Integer:     lambda_n = n, n in Z. The flip pairs n <-> -n and fixes the
//                kernel mode n = 0, which becomes the defect of the
//                Atiyah-Patodi-Singer sub-Lagrangian.
enum class SpinStructure { HalfInteger, Integer };

const char* to_string(SpinStructure s);

// A truncated boundary circle. The truncation window is flip-closed:
// HalfInteger keeps the modes n in {-n_max, ..., n_max - 1} (the n_max
// eigenvalue pairs +-(k + 1/2), k < n_max); Integer keeps n in
// {-n_max, ..., n_max} (n_max pairs plus the kernel). Every eigenvalue
// carries `multiplicity` copies.
struct SpectralObject {
  SpinStructure spin = SpinStructure::HalfInteger;
  Index n_max = 8;
  Index multiplicity = 1;
  Field field = Field::Real;
};

// Positive eigenvalues of the truncation, ascending, one entry per eigenvalue
// (multiplicities not repeated). Throws invalid_value for n_max < 1 or
// multiplicity < 1.
std::vector<double> positive_eigenvalues(const SpectralObject& obj);

// Dimension of the kernel of the truncated Dirac operator, multiplicity
// included: 0 for HalfInteger, multiplicity for Integer.
Index kernel_dim(const SpectralObject& obj);

// The truncated boundary state space, presented in the eigenbasis of the
// grading flip and sorted plus-first. For each eigenvalue pair
// (lambda, -lambda) with unit eigenmodes (e, f = flip(e)) the combination
// (e + f)/sqrt(2) spans a V+ line and (e - f)/sqrt(2) a V- line; kernel modes
// are flip-fixed and land in V+ (listed after the paired part). Within each
// grading block the layout is eigenvalue-major, multiplicity-minor.
//
// A HalfInteger space carries the degree-1 Clifford structure of the model:
// the generator acts as the standard rotation J on every (plus, minus) pair,
// exchanging each spectral half with its flip image. An Integer space is
// returned with degree 0: an odd generator would have to pair the kernel
// modes with partners they do not have.
SuperSpace boundary_space(const SpectralObject& obj, const Tolerances& tol = {});

// Atiyah-Patodi-Singer sub-Lagrangian: the span of all positive-eigenvalue
// modes of the truncation, as the graph of the partial isometry u : V+ -> V-
// sending the plus combination of each positive pair to its minus combination
// and vanishing on kernel modes. For HalfInteger spin u is unitary and the
// subspace is an honest Lagrangian; for Integer spin the defect is exactly
// the kernel block. The flip image gamma_image(aps_sublagrangian(obj)) is the
// span of all negative-eigenvalue modes, i.e. the same construction for the
// orientation-reversed circle.
GraphIsometry aps_sublagrangian(const SpectralObject& obj, const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Bordisms.
// ---------------------------------------------------------------------------

// The product bordisms of the model. Orientation bookkeeping: a bordism is
// read left to right, HalfDiscOut creates a circle (no incoming boundary)
// and HalfDiscIn caps one off (no outgoing boundary).
enum class BordismKind { Cylinder, HalfDiscIn, HalfDiscOut, IdentityThin };

const char* to_string(BordismKind k);

// Whether a bordism of this kind has an incoming / outgoing boundary circle.
bool has_source_circle(BordismKind k);
bool has_target_circle(BordismKind k);

struct Bordism {
  BordismKind kind = BordismKind::IdentityThin;
  double length = 0.0;  // cylinders only

  // length must be finite and >= 0. Zero length is the degenerate cylinder
  // (the identity correspondence); it is constructible so that the loss of
  // the Hilbert-Schmidt closeness property in the limit can be exhibited,
  // but closeness_to_aps flags it false.
  static Bordism cylinder(double length);
  static Bordism half_disc_in();
  static Bordism half_disc_out();
  static Bordism identity_thin();
};

// Graph symbol of a circle -> circle bordism over the given spectral family:
// the coefficient t_n of the diagonal solution operator, as a tail symbol
// evaluable at every mode. Cylinder(l): e^{-l lambda_n}; IdentityThin: 1.
// Throws not_composable_kinds for half-discs (their subspaces are spectral
// halves, not graphs over the whole boundary).
TailSymbol bordism_symbol(const Bordism& b, SpinStructure spin);

// Boundary-value Lagrangian of the bordism over the truncated object, as a
// correspondence between truncated boundary spaces; the (0|0) space stands in
// for an absent boundary.
//   Cylinder(l):  the graph of the diagonal solution operator
//                 diag(e^{-l lambda_n}) from the incoming boundary trace to
//                 the outgoing one (the solution decays along the cylinder on
//                 positive modes and is continued backwards on negative
//                 ones).
//   IdentityThin: the graph of the identity.
//   HalfDiscOut:  boundary values of the solutions regular at the centre of
//                 the disc: the negative spectral half, gamma . APS.
//   HalfDiscIn:   the positive spectral half, the APS subspace itself.
// Half-discs require a kernel-free spectrum (invalid_value otherwise): with
// zero modes present the spectral half is only a sub-Lagrangian and does not
// define a correspondence.
Correspondence bordism_lagrangian(const Bordism& b, const SpectralObject& obj,
                                  const Tolerances& tol = {});

// The correspondence of the infinitely long cylinder: incoming trace in the
// APS subspace, outgoing trace in its flip image, no coupling. This is the
// reference point of the closeness property below; every finite cylinder
// differs from it by the exponentially decaying tail e^{-l lambda}.
Correspondence aps_product_correspondence(const SpectralObject& obj,
                                          const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Gluing.
// ---------------------------------------------------------------------------

struct GlueReport {
  Bordism glued;               // the expected bordism of the glued surface
  bool symbol_exact = false;   // structured route reproduces the glued symbol
                               // by literal parameter equality
  double dense_defect = 0.0;   // subspace distance between the composed and
                               // the glued correspondences in the truncation
  double middle_gap = 0.0;     // smallest nonzero singular value of the
                               // composition middle operator 1 - v11 u11
  bool used_fallback = false;  // block formula handed off to the subspace route
};

// Glues `second` after `first` along the circle target(first) =
// source(second). Composable kinds: first must have an outgoing circle and
// second an incoming one, and capping a bare half-disc with the opposite
// half-disc is refused as well (the glued surface would be closed, which no
// BordismKind represents). Violations throw not_composable_kinds.
//
// The expected glued bordism: half-discs absorb cylinders and identities into
// a half-disc of the same orientation ("smoothing" them: the composed
// subspace is the same spectral half, with traces rescaled by the
// nonvanishing diagonal e^{-l lambda}); two cylinders concatenate to
// Cylinder(l1 + l2); identities are neutral. The report carries both routes:
// the exact symbol identity (for graph kinds, t1(n) t2(n) evaluated in the
// symbol algebra where rates add with no arithmetic on mode values; for disc
// absorptions, the nonvanishing of the rescaling symbol) and the dense
// composition of the truncated correspondences via the block formula.
GlueReport glue(const Bordism& first, const Bordism& second, const SpectralObject& obj,
                const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Closeness to the APS polarization.
// ---------------------------------------------------------------------------

// Whether the bordism Lagrangian differs from the orientation-matched APS
// reference by a Hilbert-Schmidt tail, decided exactly at the symbol level.
// For a cylinder the graph unitary approaches the infinite-cylinder reference
// with entrywise gap at most 2 e^{-l lambda_n} (|1 - tanh x| and sech x are
// both <= 2 e^{-x}), so the verdict is the exact square-summability of that
// dominating symbol: true iff l > 0. IdentityThin is the l = 0 degenerate
// case: false. Half-discs coincide with their orientation-matched spectral
// half: true.
bool closeness_to_aps(const Bordism& b, const SpectralObject& obj);

// Dense cross-check of the same property: the Hilbert-Schmidt distance
// between the truncated bordism graph unitary and the truncated reference,
// over a ladder of truncations of the same object. Bounded in n_max exactly
// when closeness_to_aps holds; diverges like sqrt(n_max) at l = 0.
std::vector<double> closeness_norm_ladder(const Bordism& b, const SpectralObject& base,
                                          const std::vector<Index>& n_maxes,
                                          const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Monoidal structure.
// ---------------------------------------------------------------------------

// Blockwise direct sum of two correspondences over direct_sum of their
// sources and targets (disjoint union of boundary circles). The graph
// unitary of the sum is the block-diagonal assembly of the two graph
// unitaries in the grading-sorted coordinates of the summed spaces.
Correspondence direct_sum_correspondence(const Correspondence& a, const Correspondence& b,
                                         const Tolerances& tol = {});

// ---------------------------------------------------------------------------
// Demo report (consumed by the CLI).
// ---------------------------------------------------------------------------

struct CylinderDemoReport {
  double l1 = 0.0, l2 = 0.0;
  Index n_max = 0;
  GlueReport glue;                    // Cylinder(l1) then Cylinder(l2)
  bool type2_first = false;           // closeness_to_aps of each piece
  bool type2_second = false;
  bool type2_glued = false;
  double lagrangian_residual = 0.0;   // isotropy residual of the glued frame
  std::vector<Index> ladder_n;        // closeness ladder of the glued cylinder
  std::vector<double> ladder_norm;
};

CylinderDemoReport cylinder_demo(double l1, double l2, Index n_max,
                                 const Tolerances& tol = {});

}  // namespace lagcat
