#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>

#include <Eigen/Core>

namespace bardina {

/// Fourier lattice of the periodic box [0,2*pi]^d.  Retained modes are the
/// full cube |k|_inf <= cutoff; coefficients are stored over the whole cube
/// (conjugate symmetry is kept explicitly, not folded into a half-spectrum).
struct TorusLattice {
  int dim = 3;     // 2 or 3
  int cutoff = 1;  // M >= 1

  TorusLattice() = default;
  TorusLattice(int d, int M) : dim(d), cutoff(M) {
    if (dim != 2 && dim != 3) throw std::invalid_argument("TorusLattice: dim must be 2 or 3");
    if (cutoff < 1) throw std::invalid_argument("TorusLattice: cutoff must be >= 1");
  }

  int modes_per_axis() const { return 2 * cutoff + 1; }

  Eigen::Index num_modes() const {
    Eigen::Index n = modes_per_axis();
    Eigen::Index total = 1;
    for (int a = 0; a < dim; ++a) total *= n;
    return total;
  }

  /// Row-major flattening, last axis fastest.  k components in [-M, M].
  Eigen::Index index_of(const std::array<int, 3>& k) const {
    const int n = modes_per_axis();
    Eigen::Index idx = 0;
    for (int a = 0; a < dim; ++a) idx = idx * n + (k[a] + cutoff);
    return idx;
  }

  std::array<int, 3> wavevector(Eigen::Index idx) const {
    const int n = modes_per_axis();
    std::array<int, 3> k = {0, 0, 0};
    for (int a = dim - 1; a >= 0; --a) {
      k[a] = static_cast<int>(idx % n) - cutoff;
      idx /= n;
    }
    return k;
  }

  double k_norm_sq(Eigen::Index idx) const {
    auto k = wavevector(idx);
    double s = 0;
    for (int a = 0; a < dim; ++a) s += double(k[a]) * k[a];
    return s;
  }

  double volume() const {
    double v = 1.0;
    for (int a = 0; a < dim; ++a) v *= 2.0 * EIGEN_PI;
    return v;
  }

  bool operator==(const TorusLattice& o) const { return dim == o.dim && cutoff == o.cutoff; }
  bool operator!=(const TorusLattice& o) const { return !(*this == o); }
};

}  // namespace bardina
