#include "bardina/fft.hpp"

#include <cmath>
#include <stdexcept>

namespace bardina::detail {

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

Radix2Fft::Radix2Fft(int n) : n_(n) {
  if (n < 1 || (n & (n - 1)) != 0) throw std::invalid_argument("Radix2Fft: size must be a power of two");
  log2n_ = 0;
  while ((1 << log2n_) < n) ++log2n_;
  bitrev_.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = 0;
    for (int b = 0; b < log2n_; ++b) r |= ((i >> b) & 1) << (log2n_ - 1 - b);
    bitrev_[i] = r;
  }
  twiddle_.resize(n / 2);
  for (int j = 0; j < n / 2; ++j) {
    const double ang = -2.0 * EIGEN_PI * j / n;
    twiddle_[j] = {std::cos(ang), std::sin(ang)};
  }
}

void Radix2Fft::run(std::complex<double>* x, bool inv) const {
  for (int i = 0; i < n_; ++i) {
    const int j = bitrev_[i];
    if (j > i) std::swap(x[i], x[j]);
  }
  for (int len = 2; len <= n_; len <<= 1) {
    const int half = len >> 1;
    const int step = n_ / len;
    for (int start = 0; start < n_; start += len) {
      for (int j = 0; j < half; ++j) {
        std::complex<double> w = twiddle_[j * step];
        if (inv) w = std::conj(w);
        const std::complex<double> a = x[start + j];
        const std::complex<double> b = x[start + j + half] * w;
        x[start + j] = a + b;
        x[start + j + half] = a - b;
      }
    }
  }
}

TorusGrid::TorusGrid(const TorusLattice& lattice, int min_points_per_axis)
    : lattice_(lattice),
      n_(next_pow2(std::max(min_points_per_axis, 3 * lattice.cutoff + 1))),
      fft_(next_pow2(std::max(min_points_per_axis, 3 * lattice.cutoff + 1))) {
  npts_ = 1;
  for (int a = 0; a < lattice_.dim; ++a) npts_ *= n_;
}

void TorusGrid::fft_axes(Eigen::VectorXcd& grid, bool inverse) const {
  const int d = lattice_.dim;
  std::vector<std::complex<double>> buf(n_);
  // stride of axis a in row-major (last axis fastest)
  for (int axis = d - 1; axis >= 0; --axis) {
    Eigen::Index stride = 1;
    for (int a = d - 1; a > axis; --a) stride *= n_;
    const Eigen::Index nlines = npts_ / n_;
    for (Eigen::Index line = 0; line < nlines; ++line) {
      // base offset of this line: split the counter into the parts below and above the axis
      const Eigen::Index below = line % stride;
      const Eigen::Index above = line / stride;
      const Eigen::Index base = above * stride * n_ + below;
      if (stride == 1) {
        std::complex<double>* p = grid.data() + base;
        if (inverse) fft_.inverse(p); else fft_.forward(p);
      } else {
        for (int i = 0; i < n_; ++i) buf[i] = grid[base + i * stride];
        if (inverse) fft_.inverse(buf.data()); else fft_.forward(buf.data());
        for (int i = 0; i < n_; ++i) grid[base + i * stride] = buf[i];
      }
    }
  }
}

Eigen::VectorXcd TorusGrid::to_grid(const Eigen::VectorXcd& modes) const {
  Eigen::VectorXcd grid = Eigen::VectorXcd::Zero(npts_);
  const Eigen::Index nm = lattice_.num_modes();
  for (Eigen::Index i = 0; i < nm; ++i) {
    if (modes[i] == 0.0) continue;
    auto k = lattice_.wavevector(i);
    Eigen::Index gi = 0;
    for (int a = 0; a < lattice_.dim; ++a) {
      const int kk = (k[a] % n_ + n_) % n_;
      gi = gi * n_ + kk;
    }
    grid[gi] = modes[i];
  }
  fft_axes(grid, true);
  return grid;
}

Eigen::VectorXcd TorusGrid::from_grid(const Eigen::VectorXcd& grid_in) const {
  Eigen::VectorXcd grid = grid_in;
  fft_axes(grid, false);
  const double scale = 1.0 / double(npts_);
  Eigen::VectorXcd modes(lattice_.num_modes());
  const Eigen::Index nm = lattice_.num_modes();
  for (Eigen::Index i = 0; i < nm; ++i) {
    auto k = lattice_.wavevector(i);
    Eigen::Index gi = 0;
    for (int a = 0; a < lattice_.dim; ++a) {
      const int kk = (k[a] % n_ + n_) % n_;
      gi = gi * n_ + kk;
    }
    modes[i] = grid[gi] * scale;
  }
  return modes;
}

}  // namespace bardina::detail
