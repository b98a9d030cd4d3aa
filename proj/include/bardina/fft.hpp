#pragma once

#include <complex>
#include <vector>

#include "bardina/torus.hpp"

namespace bardina::detail {

/// In-place power-of-two complex FFT with precomputed twiddles.
/// forward applies sum_j x_j e^{-2pi i jk/n} (no scaling); inverse conjugates
/// the twiddles (also unscaled).
class Radix2Fft {
 public:
  explicit Radix2Fft(int n);

  int size() const { return n_; }
  void forward(std::complex<double>* x) const { run(x, false); }
  void inverse(std::complex<double>* x) const { run(x, true); }

 private:
  void run(std::complex<double>* x, bool inv) const;

  int n_ = 0;
  int log2n_ = 0;
  std::vector<int> bitrev_;
  std::vector<std::complex<double>> twiddle_;  // e^{-2pi i j/n}, j < n/2
};

/// Physical-grid companion of a TorusLattice: a uniform n^d grid with n a
/// power of two, large enough that quadratic products of retained modes do
/// not alias back into the cube (n >= 3M+1, the 2/3-rule padding).
class TorusGrid {
 public:
  explicit TorusGrid(const TorusLattice& lattice, int min_points_per_axis = 0);

  const TorusLattice& lattice() const { return lattice_; }
  int points_per_axis() const { return n_; }
  Eigen::Index num_points() const { return npts_; }

  /// Spectral cube -> grid values u(x_j) = sum_k u_hat(k) e^{i k x_j}.
  Eigen::VectorXcd to_grid(const Eigen::VectorXcd& modes) const;
  /// Grid values -> spectral cube (truncates to |k|_inf <= M).
  Eigen::VectorXcd from_grid(const Eigen::VectorXcd& grid) const;

 private:
  void fft_axes(Eigen::VectorXcd& grid, bool inverse) const;

  TorusLattice lattice_;
  int n_ = 0;
  Eigen::Index npts_ = 0;
  Radix2Fft fft_;
};

int next_pow2(int n);

}  // namespace bardina::detail
