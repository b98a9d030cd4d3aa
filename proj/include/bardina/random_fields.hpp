#pragma once

#include <cstdint>
#include <random>

#include "bardina/field.hpp"

namespace bardina {

/// Deterministic generator: mt19937_64 bits with a hand-rolled Box-Muller so
/// that streams are reproducible independently of the standard library.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t bits() { return eng_(); }
  double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }  // [0,1)
  double gaussian();

  /// Decorrelated child seed for stream `index`.
  static uint64_t stream(uint64_t seed, uint64_t index);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

/// Random real zero-mean field with independent complex Gaussian coefficients
/// of variance |k|^{-2*decay}; conjugate symmetry enforced by construction.
SpectralField random_real_field(const TorusLattice& lattice, int components, Rng& rng,
                                double decay = 2.0);

/// As above, then Leray-projected (components = dim).
SpectralField random_solenoidal_field(const TorusLattice& lattice, Rng& rng, double decay = 2.0);

/// Scale so that the alpha-norm (or L2 norm for alpha=0) equals `norm`.
void rescale_alpha_norm(SpectralField& f, double alpha, double norm);

}  // namespace bardina
