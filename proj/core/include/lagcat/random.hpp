#pragma once

#include <cstdint>
#include <random>

#include "lagcat/polarization.hpp"

namespace lagcat {

// Deterministic random source: a fixed-seed mt19937_64 with an explicit
// uniform-to-double mapping and a hand-rolled Box-Muller transform, so the
// stream of variates is identical across platforms and standard-library
// versions (std::normal_distribution is not portable across libstdc++/libc++).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform in [0, 1) with 53-bit resolution.
  double uniform();
  // Standard normal via Box-Muller (pairs cached).
  double gaussian();
  // Standard scalar Gaussian of the field: N(0,1) real, or complex with
  // independent N(0, 1/2) parts (E|z|^2 = 1).
  Complex scalar(Field f);

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

Matrix gaussian_matrix(Rng& rng, Index rows, Index cols, Field f);

// Haar-distributed unitary (orthogonal when Real): QR of a Gaussian matrix
// with the phases of the R diagonal absorbed into Q.
Matrix haar_unitary(Rng& rng, Index n, Field f);

// Random rank-r partial isometry V+ -> V- for the given space.
GraphIsometry random_partial_isometry(Rng& rng, const SuperSpace& v, Index rank,
                                      const Tolerances& tol = {});

// Random closed isotropic subspace of dimension k (frame form).
Frame random_isotropic(Rng& rng, const SuperSpace& v, Index k, const Tolerances& tol = {});

// Correspondence with Haar graph unitary between the two spaces.
Correspondence random_correspondence(Rng& rng, const SuperSpace& v0, const SuperSpace& v1,
                                     const Tolerances& tol = {});

// Correspondence in general position with margin on the block singular
// values: resamples until min over the two off-diagonal blocks of the
// smallest singular value exceeds min_block_sv (keeps the graph/coordinate
// conversions well conditioned). Requires dim V0+ == dim V1+ and
// dim V0- == dim V1-.
Correspondence random_general_position(Rng& rng, const SuperSpace& v0, const SuperSpace& v1,
                                       double min_block_sv = 0.15, int max_tries = 2000,
                                       const Tolerances& tol = {});

// Morphisms of polarized spaces, exactly of the stated type:
//   type (1): u = [[0, A], [w1 A^H w0^H, 0]] with A Haar (needs Lagrangian
//             references and dim V0+ == dim V1+);
//   type (2): the reference morphism conjugated by exp(eps * skew) unitaries
//             on source and target, so all four deviations are O(eps).
Correspondence random_type1(Rng& rng, const PolarizedSpace& p0, const PolarizedSpace& p1,
                            const Tolerances& tol = {});
Correspondence random_type2(Rng& rng, const PolarizedSpace& p0, const PolarizedSpace& p1,
                            double eps, const Tolerances& tol = {});

}  // namespace lagcat
