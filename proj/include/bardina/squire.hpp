#pragma once

#include <complex>

#include <Eigen/Core>

#include "bardina/kolmogorov.hpp"

namespace bardina {

/// Oblique-mode reduction: a 3D mode with horizontal wavenumbers (a, b) maps
/// to a 2D problem with wavenumber sqrt(a^2+b^2) and rescaled damping.
struct SquireParams {
  double a_hat;      // sqrt(a^2 + b^2)
  double gamma_hat;  // gamma * a_hat / a
};

SquireParams squire_reduce(int a, int b, double gamma);

/// A 3D eigenmode w(x) = W(x_3) e^{i(a x_1 + b x_2)} of the stationary
/// linearized operator, recovered from an unstable 2D mode.
struct LiftedMode {
  int a = 0, b = 0, r = 0, s = 0;
  std::complex<double> eigenvalue;  // (a/a_hat) * mu of the 2D problem
  Eigen::VectorXi m;                // x_3 harmonics, m_n = s n + r
  Eigen::MatrixXcd w;               // family_size x 3, columns w1 w2 w3
  double residual = 0;              // |L3 w - eigenvalue w| / |w| on the extended family
  double divergence = 0;            // max_n |a w1 + b w2 + m w3| / max |w|
  double condition = 0;             // condition number of the w2 solve
};

/// Recovers the full 3D mode from a 2D eigenresult computed at the reduced
/// parameters (a_hat, gamma_hat): solves for the spanwise component, rebuilds
/// the streamwise one, and reports the residual of the 3D linearization.
/// Throws when the spanwise solve is ill-conditioned (> 1e12).
LiftedMode squire_lift(const EigenResult& mode2d, int a, int b, const KolmogorovFlow& f, int N);

}  // namespace bardina
