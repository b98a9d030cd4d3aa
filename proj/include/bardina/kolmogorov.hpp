#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "bardina/field.hpp"

namespace bardina {

/// Single-harmonic shear forcing g = (gamma lambda sin(s x_last), 0[, 0]) and
/// its steady state u0 = (lambda sin(s x_last), 0[, 0]).
struct KolmogorovFlow {
  int s = 1;            // forcing wavenumber, >= 1
  double lambda = 1.0;  // amplitude, > 0
  double gamma = 1.0;
  double alpha = 1.0;
  int dim = 3;

  KolmogorovFlow() = default;
  KolmogorovFlow(int s, double lambda, double gamma, double alpha, int dim = 3);
};

SpectralField kolmogorov_forcing(const KolmogorovFlow& f, const TorusLattice& lattice);
/// The filtered steady profile (amplitude lambda/(1+alpha s^2)).
SpectralField kolmogorov_steady_state(const KolmogorovFlow& f, const TorusLattice& lattice);

/// Wavenumber region where the coupled shear harmonics admit growth, and the
/// rectangle of it used for counting.
struct RegionParams {
  double delta = 0.5;  // in (0, 1/sqrt(3))
  double c2 = 0.05;    // |r| band half-width, in units of s
  double c3 = 0.5;     // annulus radii in units of s
  double c4 = 0.55;

  void validate() const;  // throws on out-of-range constants
};

bool region_A_contains(double t_prime, int r, int s, double delta);

/// Tridiagonal restriction of the linearized vorticity operator to the mode
/// family k_n = (t', s n + r), |n| <= N.  Column n holds gamma on the
/// diagonal and +-c_n off it, with
///   c_n = (t' lambda / (2(1+alpha s^2))) (|k_n|^2 - s^2)/(|k_n|^2 (1+alpha |k_n|^2)).
struct CouplingMatrix {
  double gamma = 0;
  double t_prime = 0;
  int r = 0, s = 0, N = 0;
  Eigen::VectorXd coupling;  // c_n, index n+N

  int family_size() const { return 2 * N + 1; }
  Eigen::MatrixXd dense() const;
};

CouplingMatrix build_tridiagonal(const KolmogorovFlow& f, double t_prime, int r, int N);

/// Brute-force assembly of the same operator on all harmonics |m| <= cutoff at
/// fixed t', composing the inverse-elliptic factors and the Jacobian products
/// mode by mode (test oracle; block-diagonal over residues m mod s).
Eigen::MatrixXd dense_vorticity_operator(const KolmogorovFlow& f, double t_prime, int cutoff);

/// Indices m = s n + r, |m| <= cutoff, of the residue-r block of the dense
/// operator, in increasing n order.
std::vector<int> dense_residue_block(int s, int r, int cutoff);

struct EigenResult {
  std::complex<double> mu;       // eigenvalue of smallest real part
  bool unstable = false;         // Re mu < 0 (the dynamics is dtw = -L w)
  Eigen::VectorXcd coefficients; // eigenvector over the family, n = -N..N
  int truncation = 0;            // N actually used
  bool converged = false;
  double t_prime = 0;
  int r = 0;
};

/// Smallest-real-part eigenvalue with truncation doubled until the relative
/// change drops below 1e-10.  Throws on non-convergence at N = 512.
EigenResult most_unstable_eigenvalue(const KolmogorovFlow& f, double t_prime, int r);

/// Smallest amplitude with Re mu < 0, by bisection to relative 1e-6.
/// Returns nullopt when the family stays stable up to lambda = 1e8.
std::optional<double> critical_lambda(const KolmogorovFlow& f, double t_prime, int r);

/// lambda* s / (gamma (1+alpha s^2)^2), the empirical threshold constant.
double critical_constant(const KolmogorovFlow& f, double t_prime, int r, double lambda_star);

/// Integer triples (a,b,r): a>0, a>=|b|, c3 s <= sqrt(a^2+b^2) <= c4 s,
/// 0 <= r < c2 s (one representative of each +-r pair, matching the
/// (pi/4) c2 (c4^2-c3^2) s^3 asymptotic count).
std::vector<std::array<int, 3>> unstable_triples(int s, const RegionParams& rp);

/// true iff every enumerated triple's (sqrt(a^2+b^2), r) lies in A(delta).
bool validate_rectangle(int s, const RegionParams& rp);

struct TripleCount {
  long long count = 0;
  double count_over_s3 = 0;
  double c5 = 0;  // (pi/4) c2 (c4^2 - c3^2)
};

TripleCount count_unstable_3d(int s, const RegionParams& rp);

struct LowerBoundResult {
  int s = 0;
  double alpha = 0, gamma = 0;
  double lambda = 0;        // sqrt(2) c1 gamma (1+alpha s^2)^2 / s
  double g_norm_sq = 0;     // (gamma lambda)^2 (2 pi)^3 / 2, exact
  long long count = 0;
  double c5 = 0;
  double c6 = 0;            // count alpha^{5/2} gamma^4 / g_norm_sq
  double c7 = 0, c8 = 0;    // lambda = c7 gamma sqrt(alpha), g^2 = c8 gamma^4 alpha at s = 1/sqrt(alpha)
  int verified_samples = 0; // triples re-checked through the reduction + eigensolve
  int verified_unstable = 0;
};

/// Counting-based dimension lower bound at s = round(1/sqrt(alpha)).
/// `verify_samples` > 0 re-checks that many enumerated triples for growth
/// (all of them when fewer exist).
LowerBoundResult lower_bound_dimension(double alpha, double gamma, const RegionParams& rp,
                                       double c1, int verify_samples = 0, uint64_t seed = 1);

/// Frozen default for the threshold constant: twice the measured supremum of
/// critical_constant over the default rectangle at s = 32.
inline constexpr double kDefaultC1 = 6.2756;

}  // namespace bardina
