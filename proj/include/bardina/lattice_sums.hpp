#pragma once

#include <vector>

namespace bardina {

struct LatticeSumResult {
  enum class Method { direct, poisson };
  double value = 0;
  double truncation_radius = 0;  // lattice-space cutoff actually used
  double tail_bound = 0;         // certified bound on everything dropped
  Method method = Method::direct;
};

/// F(m) = m sum_{k in Z^3 \ 0} (|k|^2+m^2)^{-2}, evaluated in lattice space.
/// The slowly decaying sum is split with a Gaussian weight e^{-eta(|k|^2+m^2)}:
/// the weighted part is summed over |k| <= R with an integral-comparison tail
/// bound, the complement is an explicit one-dimensional theta integral done by
/// Gauss-Legendre quadrature with a doubled-node error estimate.  No dual
/// lattice is involved, so agreement with F_poisson tests the summation
/// identity itself.  Rejects tol < 1e-14.
LatticeSumResult F_direct(double m, double tol);

/// Exponentially convergent dual form
/// pi^2 + pi^2 sum_{k != 0} e^{-2 pi m |k|} - m^{-3}; refuses m < 1e-3.
LatticeSumResult F_poisson(double m, double tol);

/// Crossover wrapper: poisson for m >= 0.5, direct below.
LatticeSumResult F_best(double m, double tol);

struct G0Report {
  double g0_at_1 = 0;            // reference -0.7562
  bool decreasing_on_1_10 = false;
  double lemma_chain_value = 0;  // reference 9.4915, must stay below pi^2
  double max_first = 0;          // max of 6m/(1+m^2)^2 on [0,1], = 9 sqrt(3)/8
  double max_second = 0;         // max of 12m/(2+m^2)^2 on [0,1], = 9 sqrt(6)/16
  double max_first_exact = 0;
  double max_second_exact = 0;
  bool pass = false;
};

/// Evaluates the explicit majorant chain controlling F(m) on m <= 1 and the
/// decreasing envelope controlling it on m >= 1.
G0Report g0_ledger();

/// Torus Green-function diagonal G_{d,m}(0) = (2 pi)^{-d} sum_{k != 0} (m^2+|k|^2)^{-2}.
LatticeSumResult green_torus(double m, int d, double tol);

/// Whole-space reference values 1/(8 pi m) (d=3) and 1/(4 pi m^2) (d=2).
double green_reference(double m, int d);

/// true iff G_{d,m}(0) < its whole-space reference on every grid point.
bool check_est_lat(const std::vector<double>& m_grid, int d);

std::vector<double> log_grid(double lo, double hi, int n);

}  // namespace bardina
