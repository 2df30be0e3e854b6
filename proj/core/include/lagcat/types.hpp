#pragma once

#include <stdexcept>
#include <string>

namespace lagcat {

// Scalar field of a space or matrix. A runtime tag, not a template parameter:
// real and complex data share one code path and one storage type.
enum class Field { Real, Complex };

inline const char* to_string(Field f) { return f == Field::Real ? "R" : "C"; }

// Numerical policy. All operations that make a yes/no decision take one of
// these (defaulted); the three knobs mean:
//   ortho       - admissibility of an isometric frame:  ||F^H F - I||_F <= ortho
//   proj        - equality of subspaces, measured between orthogonal
//                 projectors in Frobenius norm:  ||P1 - P2||_F <= proj
//   rank_cutoff - relative SVD cutoff: a singular value sigma counts as zero
//                 iff sigma <= rank_cutoff * sigma_max (boundary counts as 0)
struct Tolerances {
  double ortho = 1e-10;
  double proj = 1e-8;
  double rank_cutoff = 1e-10;
};

// Error condition codes. Every failure the library can diagnose maps to one
// of these; the CLI maps Error{data-level codes} to exit code 1 and malformed
// input (parse_error and friends) to exit code 2.
enum class Errc {
  dimension_mismatch,
  field_mismatch,
  degree_mismatch,
  space_mismatch,
  invalid_value,
  parse_error,
  not_isotropic,
  not_partial_isometry,
  not_unitary,
  singular_block,
  singular,
  non_convergence,
  not_unitary_result,
  not_a_module,
  not_invariant,
  not_a_morphism,
  not_composable_kinds,
  unsupported_degree,
  unsupported_symbols,
  not_closed,
};

const char* to_string(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool ok, Errc code, const std::string& msg) {
  if (!ok) fail(code, msg);
}

}  // namespace lagcat
