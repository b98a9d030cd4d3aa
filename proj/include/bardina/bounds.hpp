#pragma once

#include <vector>

#include "bardina/kolmogorov.hpp"

namespace bardina {

// Closed-form attractor-dimension upper bounds.  Norms are the physical L2
// norms over the box (not squared).
double upper_bound_3d(double g_norm, double alpha, double gamma);
double upper_bound_2d(double g_norm, double alpha, double gamma);
double upper_bound_2d_vorticity(double rot_g_norm, double alpha, double gamma);

/// Bound on the n-th volume contraction exponent sum,
/// q(n) = -gamma n + coeff * sqrt(n), in two chained forms:
///  * instantaneous, with a measured time-averaged gradient;
///  * closed, with the gradient replaced by its forcing bound.
double q_of_n(long long n, double grad_avg, double gamma, double alpha);
double q_of_n_forcing(long long n, double g_norm, double gamma, double alpha);

/// sqrt(n) coefficients of the two forms.
double q_sqrt_coefficient(double grad_avg, double alpha);
double q_sqrt_coefficient_forcing(double g_norm, double gamma, double alpha);

/// Smallest n with -gamma n + K sqrt(n) <= 0 (and strictly negative beyond):
/// ceil((K/gamma)^2); returns 1 for K = 0.
long long n_star(double K, double gamma);

// Constants emitted for audit.
inline constexpr double kCoeff3d = 1.0 / (12.0 * EIGEN_PI);
inline constexpr double kCoeff2d = 1.0 / (16.0 * EIGEN_PI);
inline constexpr double kCoeff2dVorticity = 1.0 / (8.0 * EIGEN_PI);
double coeff_q_instantaneous();  // 1/sqrt(6 pi)
double coeff_q_forcing();        // 1/(2 sqrt(3 pi))

struct BoundRow {
  int s = 0;
  double alpha = 0;
  double g_norm_sq = 0;
  double upper = 0;          // closed-form 3D upper bound
  long long count = 0;       // enumerated triples
  double lower_asymptotic = 0;  // c5 s^3 = c5 alpha^{-3/2}
  double c6 = 0;             // measured count-based constant
  double ratio_form = 0;     // upper / lower_asymptotic
  double ratio_count = 0;    // upper / count
  long long nstar = 0;
};

struct BoundReport {
  double gamma = 0, c1 = 0;
  RegionParams region;
  std::vector<BoundRow> rows;
  double slope_upper = 0;       // log-log slope of upper vs alpha
  double slope_lower = 0;       // log-log slope of the asymptotic lower bound
  double nstar_coefficient = 0; // (K/gamma)^2 alpha^{5/2} gamma^4 / g^2, must equal 1/(12 pi)
  double min_ratio_form = 0, min_ratio_count = 0;
  double max_ratio_form = 0;
};

/// Two-sided consistency sweep: for each s, alpha = s^{-2}, the Kolmogorov
/// forcing at amplitude sqrt(2) c1 gamma (1+alpha s^2)^2/s, the closed-form
/// upper bound, the exact triple count and the asymptotic count form.
BoundReport consistency_report(double gamma, const RegionParams& rp, double c1,
                               const std::vector<int>& s_values);

}  // namespace bardina
