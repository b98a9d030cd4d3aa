#include "bardina/ops.hpp"

#include <stdexcept>

#include "bardina/fft.hpp"

namespace bardina {

using std::complex;

SpectralField leray_project(const SpectralField& f) {
  if (!f.flags.zero_mean)
    throw std::invalid_argument("leray_project: field must have zero mean");
  const auto& lat = f.lattice();
  if (f.components() != lat.dim)
    throw std::invalid_argument("leray_project: need one component per axis");
  SpectralField out = f;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
    auto k = lat.wavevector(i);
    double k2 = 0;
    complex<double> kdotu = 0;
    for (int a = 0; a < lat.dim; ++a) {
      k2 += double(k[a]) * k[a];
      kdotu += double(k[a]) * f.at(i, a);
    }
    if (k2 == 0) continue;  // mean mode: identity (it is zero anyway)
    for (int a = 0; a < lat.dim; ++a) out.at(i, a) -= double(k[a]) * kdotu / k2;
  }
  out.flags.divergence_free = true;
  return out;
}

SpectralField helmholtz_filter(const SpectralField& f, double alpha) {
  if (alpha < 0) throw std::invalid_argument("helmholtz_filter: alpha must be >= 0");
  const auto& lat = f.lattice();
  SpectralField out = f;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i)
    out.data().row(i) /= (1.0 + alpha * lat.k_norm_sq(i));
  return out;
}

SpectralField helmholtz_sharpen(const SpectralField& f, double alpha) {
  const auto& lat = f.lattice();
  SpectralField out = f;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i)
    out.data().row(i) *= (1.0 + alpha * lat.k_norm_sq(i));
  return out;
}

SpectralField curl(const SpectralField& f) {
  const auto& lat = f.lattice();
  if (f.components() != lat.dim)
    throw std::invalid_argument("curl: need one component per axis");
  const complex<double> I(0, 1);
  if (lat.dim == 2) {
    SpectralField out(lat, 1, f.flags);
    out.flags.divergence_free = false;
    for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
      auto k = lat.wavevector(i);
      out.at(i, 0) = I * (double(k[0]) * f.at(i, 1) - double(k[1]) * f.at(i, 0));
    }
    return out;
  }
  SpectralField out(lat, 3, f.flags);
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
    auto k = lat.wavevector(i);
    const complex<double> u0 = f.at(i, 0), u1 = f.at(i, 1), u2 = f.at(i, 2);
    out.at(i, 0) = I * (double(k[1]) * u2 - double(k[2]) * u1);
    out.at(i, 1) = I * (double(k[2]) * u0 - double(k[0]) * u2);
    out.at(i, 2) = I * (double(k[0]) * u1 - double(k[1]) * u0);
  }
  out.flags.divergence_free = true;  // curl is solenoidal
  return out;
}

SpectralField velocity_from_vorticity_2d(const SpectralField& omega) {
  const auto& lat = omega.lattice();
  if (lat.dim != 2 || !omega.is_scalar())
    throw std::invalid_argument("velocity_from_vorticity_2d: need a 2D scalar field");
  const complex<double> I(0, 1);
  SpectralField out(lat, 2, omega.flags);
  out.flags.divergence_free = true;
  for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
    auto k = lat.wavevector(i);
    const double k2 = double(k[0]) * k[0] + double(k[1]) * k[1];
    if (k2 == 0) continue;
    const complex<double> psi = -omega.at(i, 0) / k2;  // stream function
    out.at(i, 0) = -I * double(k[1]) * psi;
    out.at(i, 1) = I * double(k[0]) * psi;
  }
  return out;
}

SpectralField advect(const SpectralField& u, const SpectralField& v) {
  const auto& lat = u.lattice();
  if (lat != v.lattice())
    throw std::invalid_argument("advect: lattice mismatch");
  if (u.components() != lat.dim || v.components() != lat.dim)
    throw std::invalid_argument("advect: need one component per axis");
  const int d = lat.dim;
  const detail::TorusGrid grid(lat);
  const complex<double> I(0, 1);

  // velocity factors on the padded grid; real part only, inputs are real fields
  std::vector<Eigen::VectorXd> ug(d);
  for (int j = 0; j < d; ++j) ug[j] = grid.to_grid(u.data().col(j)).real();

  SpectralField out(lat, d, FieldFlags{});
  Eigen::VectorXcd deriv_modes(lat.num_modes());
  Eigen::VectorXcd acc(grid.num_points());
  for (int i = 0; i < d; ++i) {
    acc.setZero();
    for (int j = 0; j < d; ++j) {
      for (Eigen::Index m = 0; m < lat.num_modes(); ++m)
        deriv_modes[m] = I * double(lat.wavevector(m)[j]) * v.at(m, i);
      const Eigen::VectorXd dv = grid.to_grid(deriv_modes).real();
      acc.real() += ug[j].cwiseProduct(dv);
    }
    out.data().col(i) = grid.from_grid(acc);
  }
  out.flags.real_valued = u.flags.real_valued && v.flags.real_valued;
  return out;
}

SpectralField bardina_nonlinearity(const SpectralField& u, const SpectralField& v, double alpha) {
  if (u.lattice() != v.lattice())
    throw std::invalid_argument("bardina_nonlinearity: lattice mismatch");
  if (!u.flags.divergence_free || !u.flags.zero_mean || !u.flags.real_valued ||
      !v.flags.divergence_free || !v.flags.zero_mean || !v.flags.real_valued)
    throw std::invalid_argument(
        "bardina_nonlinearity: inputs must be divergence-free, zero-mean, real");
  SpectralField w = advect(u, v);
  // the advected mean vanishes for solenoidal u; pin it exactly
  const std::array<int, 3> zero = {0, 0, 0};
  w.data().row(w.lattice().index_of(zero)).setZero();
  w.flags.zero_mean = true;
  w.flags.real_valued = true;
  w = leray_project(w);
  w = helmholtz_filter(w, alpha);
  return w;
}

}  // namespace bardina
