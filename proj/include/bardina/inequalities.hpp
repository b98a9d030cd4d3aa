#pragma once

#include <cstdint>

#include "bardina/field.hpp"

namespace bardina {

/// Family of fields orthonormalized under the alpha inner product.
struct OrthoFamily {
  std::vector<SpectralField> members;
  double gram_defect = 0;  // max |Gram - I|
  int redraws = 0;
};

/// Draws n random zero-mean real fields (solenoidal vector fields, or scalars
/// when components == 1) and orthonormalizes them; redraws on Gram condition
/// above 1e8.
OrthoFamily draw_ortho_family(const TorusLattice& lattice, int components, int n, double alpha,
                              class Rng& rng);

/// |sum_j |theta_j|^2|_{L2} for an orthonormal family, integrated exactly on
/// an oversampled grid.
double density_l2_norm(const OrthoFamily& fam);

/// Bound constants: (2 sqrt(pi))^{-1} n^{1/2} alpha^{-1/2} (d=2) or
/// alpha^{-3/4} (d=3); the scalar 3D family tightens by sqrt(2).
double collective_bound(int n, double alpha, int dim, bool scalar_family);

struct CollectiveReport {
  int n = 0, dim = 0, trials = 0;
  double alpha = 0;
  int violations = 0;
  int redraws = 0;
  double max_saturation = 0;         // max over trials of |rho| / bound, vector families
  double max_saturation_scalar = 0;  // same for the scalar variant
  uint64_t seed = 0;
  bool pass() const { return violations == 0; }
};

/// Fuzzes the collective bound for solenoidal families and the scalar-family
/// variant side by side.
CollectiveReport collective_sobolev_check(int n, double alpha, int dim,
                                          const TorusLattice& lattice, int trials, uint64_t seed);

struct PointwiseReport {
  int dim = 0;
  long long trials = 0;
  long long violations = 0;
  double max_saturation = 0;      // |theta.G theta| / (sqrt((d-1)/d) |theta|^2 |G|_F)
  double equality_defect = 0;     // extremal-spectrum gap of the matrix-norm bound
  double matrix_violations = 0;   // spot checks of the symmetric trace-free bound
  uint64_t seed = 0;
  bool pass() const { return violations == 0 && matrix_violations == 0 && equality_defect < 1e-12; }
};

/// Fuzzes |theta.G theta| <= sqrt((d-1)/d) |theta|^2 |G|_F over trace-free G,
/// checks the operator-norm bound for symmetric trace-free matrices by
/// eigendecomposition, and saturates its equality case.
PointwiseReport pointwise_inequality_check(int dim, long long trials, uint64_t seed);

}  // namespace bardina
