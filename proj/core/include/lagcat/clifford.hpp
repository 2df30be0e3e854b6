#pragma once

#include <vector>

#include "lagcat/lagrangian.hpp"

namespace lagcat {

// --- irreducible graded modules -------------------------------------------
//
// A graded module of degree d is a SuperSpace carrying d odd anticommuting
// skew-adjoint generators squaring to -1 (validated by the SuperSpace
// constructor). The functions below construct the irreducible ones, following
// the classification over each field:
//   real:    one irreducible class unless d = 0, 4 (mod 8), where there are
//            two, swapped by flipping the orientation of the top generator;
//   complex: one class for odd d, two for even d.
// Dimensions follow the doubling periodicity; they are exposed via
// irrep_dim so that consistency with the constructed modules is testable.

int irrep_count(int d, Field f);
Index irrep_dim(int d, Field f);

// The standard irreducible graded module of degree d; `which` in
// [0, irrep_count) selects the class. Degrees up to 12 are supported;
// unsupported_degree beyond.
SuperSpace irreducible_module(int d, Field f, int which = 0);

// The algebra acting on itself by left multiplication, graded by word
// parity, in a grading-sorted basis. Dimension 2^d over the field.
SuperSpace regular_module(int d, Field f);

// --- decomposition and index classes --------------------------------------

struct ModuleDecomposition {
  int degree = 0;
  Field field = Field::Real;
  long mult_total = 0;      // dim / irrep_dim
  std::vector<long> mult;   // per-class multiplicities, size irrep_count
};

// Multiplicities of the irreducible classes inside a module. For two-class
// degrees they are separated by the trace of the central grading-volume
// involution sigma = Gamma e_1 ... e_d (suitably normalized), calibrated so
// the standard irreducible (which = 0) has sigma-value +1. Errors with
// not_a_module when the data is not a module (bad relations, dimension not
// divisible, non-integral multiplicities).
ModuleDecomposition decompose_module(const SuperSpace& module, const Tolerances& tol = {});

// Coefficient group of the degree-d index over the field: the periodic
// pattern Z, Z2, Z2, 0, Z, 0, 0, 0 (real, period 8) and Z, 0 (complex,
// period 2).
enum class IndexGroup { Z, Z2, Zero };
const char* to_string(IndexGroup g);
IndexGroup index_group(int d, Field f);

// An element of the coefficient group: for Z the difference m+ - m- of the
// two class multiplicities, for Z2 the total multiplicity mod 2, for the
// trivial group always 0.
struct IndexClass {
  int degree = 0;
  Field field = Field::Real;
  IndexGroup group = IndexGroup::Zero;
  long value = 0;
};

IndexClass index_class_of(const ModuleDecomposition& dec);
IndexClass add(const IndexClass& a, const IndexClass& b);

// Index of a closed isotropic subspace L of a degree-d module space V: the
// class of the defect module (L + Gamma L)^perp. Requires L isotropic
// (not_isotropic) and, when d > 0, invariant under the generators
// (not_invariant). A Lagrangian has zero defect, hence index 0.
IndexClass sub_lagrangian_index(const SuperSpace& v, const Frame& l,
                                const Tolerances& tol = {});

// The defect of a sub-Lagrangian as a free-standing graded module space
// (grading-sorted basis, restricted generators). Useful for inspecting what
// sub_lagrangian_index classifies.
SuperSpace defect_module(const SuperSpace& v, const Frame& l, const Tolerances& tol = {});

}  // namespace lagcat
