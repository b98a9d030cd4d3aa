#include "bardina/bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace bardina {

double upper_bound_3d(double g_norm, double alpha, double gamma) {
  if (!(g_norm >= 0 && alpha > 0 && gamma > 0))
    throw std::invalid_argument("upper_bound_3d: bad arguments");
  return kCoeff3d * g_norm * g_norm / (std::pow(alpha, 2.5) * std::pow(gamma, 4));
}

double upper_bound_2d(double g_norm, double alpha, double gamma) {
  if (!(g_norm >= 0 && alpha > 0 && gamma > 0))
    throw std::invalid_argument("upper_bound_2d: bad arguments");
  return kCoeff2d * g_norm * g_norm / (alpha * alpha * std::pow(gamma, 4));
}

double upper_bound_2d_vorticity(double rot_g_norm, double alpha, double gamma) {
  if (!(rot_g_norm >= 0 && alpha > 0 && gamma > 0))
    throw std::invalid_argument("upper_bound_2d_vorticity: bad arguments");
  return kCoeff2dVorticity * rot_g_norm * rot_g_norm / (alpha * std::pow(gamma, 4));
}

double coeff_q_instantaneous() { return 1.0 / std::sqrt(6.0 * EIGEN_PI); }
double coeff_q_forcing() { return 1.0 / (2.0 * std::sqrt(3.0 * EIGEN_PI)); }

double q_sqrt_coefficient(double grad_avg, double alpha) {
  return coeff_q_instantaneous() * std::pow(alpha, -0.75) * grad_avg;
}

double q_sqrt_coefficient_forcing(double g_norm, double gamma, double alpha) {
  return coeff_q_forcing() * std::pow(alpha, -1.25) * g_norm / gamma;
}

double q_of_n(long long n, double grad_avg, double gamma, double alpha) {
  if (n < 1) throw std::invalid_argument("q_of_n: n must be >= 1");
  return -gamma * double(n) + q_sqrt_coefficient(grad_avg, alpha) * std::sqrt(double(n));
}

double q_of_n_forcing(long long n, double g_norm, double gamma, double alpha) {
  if (n < 1) throw std::invalid_argument("q_of_n_forcing: n must be >= 1");
  return -gamma * double(n) + q_sqrt_coefficient_forcing(g_norm, gamma, alpha) * std::sqrt(double(n));
}

long long n_star(double K, double gamma) {
  if (K < 0) throw std::invalid_argument("n_star: K must be >= 0");
  if (K == 0) return 1;  // first nonpositive index, degenerate case
  const double x = (K / gamma) * (K / gamma);
  return std::max<long long>(1, (long long)std::ceil(x - 1e-12));
}

namespace {
double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const std::size_t n = x.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}
}  // namespace

BoundReport consistency_report(double gamma, const RegionParams& rp, double c1,
                               const std::vector<int>& s_values) {
  rp.validate();
  BoundReport rep;
  rep.gamma = gamma;
  rep.c1 = c1;
  rep.region = rp;
  std::vector<double> la, lu, ll;
  rep.min_ratio_form = rep.min_ratio_count = std::numeric_limits<double>::infinity();
  rep.max_ratio_form = 0;
  for (int s : s_values) {
    const double alpha = 1.0 / (double(s) * s);
    if (!(alpha <= 1.0 / 16.0))
      throw std::invalid_argument("consistency_report: need alpha <= 1/16 (s >= 4)");
    BoundRow row;
    row.s = s;
    row.alpha = alpha;
    const LowerBoundResult lb = lower_bound_dimension(alpha, gamma, rp, c1);
    row.g_norm_sq = lb.g_norm_sq;
    row.count = lb.count;
    row.c6 = lb.c6;
    row.upper = upper_bound_3d(std::sqrt(lb.g_norm_sq), alpha, gamma);
    row.lower_asymptotic = lb.c5 * std::pow(alpha, -1.5);
    row.ratio_form = row.upper / row.lower_asymptotic;
    row.ratio_count = row.count > 0 ? row.upper / double(row.count)
                                    : std::numeric_limits<double>::infinity();
    row.nstar = n_star(q_sqrt_coefficient_forcing(std::sqrt(lb.g_norm_sq), gamma, alpha), gamma);
    rep.rows.push_back(row);
    la.push_back(std::log(alpha));
    lu.push_back(std::log(row.upper));
    ll.push_back(std::log(row.lower_asymptotic));
    rep.min_ratio_form = std::min(rep.min_ratio_form, row.ratio_form);
    rep.max_ratio_form = std::max(rep.max_ratio_form, row.ratio_form);
    rep.min_ratio_count = std::min(rep.min_ratio_count, row.ratio_count);
  }
  rep.slope_upper = fit_slope(la, lu);
  rep.slope_lower = fit_slope(la, ll);
  // closed-form root of q against the dimension coefficient
  {
    const double alpha = rep.rows.empty() ? 1.0 / 64.0 : rep.rows.front().alpha;
    const double g = rep.rows.empty() ? 1.0 : std::sqrt(rep.rows.front().g_norm_sq);
    const double K = q_sqrt_coefficient_forcing(g, gamma, alpha);
    rep.nstar_coefficient =
        (K / gamma) * (K / gamma) * std::pow(alpha, 2.5) * std::pow(gamma, 4) / (g * g);
  }
  return rep;
}

}  // namespace bardina
