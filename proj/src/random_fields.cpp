#include "bardina/random_fields.hpp"

#include <cmath>

#include "bardina/ops.hpp"

namespace bardina {

double Rng::gaussian() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double u1 = 1.0 - uniform();  // (0,1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double a = 2.0 * EIGEN_PI * u2;
  spare_ = r * std::sin(a);
  have_spare_ = true;
  return r * std::cos(a);
}

uint64_t Rng::stream(uint64_t seed, uint64_t index) {
  uint64_t x = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

SpectralField random_real_field(const TorusLattice& lattice, int components, Rng& rng,
                                double decay) {
  SpectralField f(lattice, components);
  f.flags.zero_mean = true;
  f.flags.real_valued = true;
  const Eigen::Index nm = lattice.num_modes();
  for (Eigen::Index i = 0; i < nm; ++i) {
    auto k = lattice.wavevector(i);
    // fill the lexicographically positive half; mirror the conjugate
    int lead = 0;
    for (int a = 0; a < lattice.dim; ++a) {
      if (k[a] != 0) { lead = k[a]; break; }
    }
    if (lead <= 0) continue;
    const double k2 = lattice.k_norm_sq(i);
    const double sigma = std::pow(k2, -decay / 2.0);
    std::array<int, 3> mk = {-k[0], -k[1], -k[2]};
    const Eigen::Index j = lattice.index_of(mk);
    for (int c = 0; c < components; ++c) {
      const std::complex<double> z(rng.gaussian(), rng.gaussian());
      f.at(i, c) = sigma * z;
      f.at(j, c) = std::conj(f.at(i, c));
    }
  }
  return f;
}

SpectralField random_solenoidal_field(const TorusLattice& lattice, Rng& rng, double decay) {
  return leray_project(random_real_field(lattice, lattice.dim, rng, decay));
}

void rescale_alpha_norm(SpectralField& f, double alpha, double norm) {
  const double cur = std::sqrt(alpha_norm_sq(f, alpha));
  if (cur > 0) f *= norm / cur;
}

}  // namespace bardina
