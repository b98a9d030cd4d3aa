#include "bardina/field.hpp"

#include <stdexcept>

namespace bardina {

namespace {
void require_same_lattice(const SpectralField& u, const SpectralField& v) {
  if (u.lattice() != v.lattice() || u.components() != v.components())
    throw std::invalid_argument("fields live on different lattices");
}
}  // namespace

double l2_inner(const SpectralField& u, const SpectralField& v) {
  require_same_lattice(u, v);
  const std::complex<double> s = (u.data().conjugate().cwiseProduct(v.data())).sum();
  return u.lattice().volume() * s.real();
}

double l2_norm_sq(const SpectralField& u) {
  return u.lattice().volume() * u.data().squaredNorm();
}

double grad_norm_sq(const SpectralField& u) {
  const auto& lat = u.lattice();
  double s = 0;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i)
    s += lat.k_norm_sq(i) * u.data().row(i).squaredNorm();
  return lat.volume() * s;
}

double alpha_inner(const SpectralField& u, const SpectralField& v, double alpha) {
  require_same_lattice(u, v);
  const auto& lat = u.lattice();
  std::complex<double> s = 0;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i)
    s += (1.0 + alpha * lat.k_norm_sq(i)) *
         (u.data().row(i).conjugate().cwiseProduct(v.data().row(i))).sum();
  return lat.volume() * s.real();
}

double alpha_norm_sq(const SpectralField& u, double alpha) {
  const auto& lat = u.lattice();
  double s = 0;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i)
    s += (1.0 + alpha * lat.k_norm_sq(i)) * u.data().row(i).squaredNorm();
  return lat.volume() * s;
}

double max_divergence(const SpectralField& u) {
  const auto& lat = u.lattice();
  if (u.components() != lat.dim) return 0.0;
  double worst = 0;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
    auto k = lat.wavevector(i);
    std::complex<double> div = 0;
    for (int a = 0; a < lat.dim; ++a) div += double(k[a]) * u.at(i, a);
    worst = std::max(worst, std::abs(div));
  }
  return worst;
}

double mean_magnitude(const SpectralField& u) {
  const std::array<int, 3> zero = {0, 0, 0};
  const Eigen::Index i0 = u.lattice().index_of(zero);
  return u.data().row(i0).norm();
}

double conjugate_symmetry_defect(const SpectralField& u) {
  const auto& lat = u.lattice();
  double worst = 0;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
    auto k = lat.wavevector(i);
    std::array<int, 3> mk = {-k[0], -k[1], -k[2]};
    const Eigen::Index j = lat.index_of(mk);
    for (int c = 0; c < u.components(); ++c)
      worst = std::max(worst, std::abs(u.at(j, c) - std::conj(u.at(i, c))));
  }
  return worst;
}

double max_coefficient(const SpectralField& u) {
  return u.data().cwiseAbs().maxCoeff();
}

double sup_norm_bound(const SpectralField& u) {
  double worst = 0;
  for (int c = 0; c < u.components(); ++c)
    worst = std::max(worst, u.data().col(c).cwiseAbs().sum());
  return worst;
}

bool flags_hold(const SpectralField& u, double tol) {
  if (u.flags.zero_mean && mean_magnitude(u) > tol) return false;
  if (u.flags.real_valued && conjugate_symmetry_defect(u) > tol) return false;
  if (u.flags.divergence_free) {
    // scale-relative: |k.u_hat| < tol * |u_hat| per mode
    const auto& lat = u.lattice();
    if (u.components() == lat.dim) {
      for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
        auto k = lat.wavevector(i);
        std::complex<double> div = 0;
        double knorm = 0;
        for (int a = 0; a < lat.dim; ++a) {
          div += double(k[a]) * u.at(i, a);
          knorm += double(k[a]) * k[a];
        }
        const double scale = std::sqrt(knorm) * u.data().row(i).norm();
        if (std::abs(div) > tol * std::max(scale, 1e-300)) return false;
      }
    }
  }
  return true;
}

}  // namespace bardina
