#include "bardina/kolmogorov.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "bardina/random_fields.hpp"
#include "bardina/squire.hpp"

namespace bardina {

using std::complex;

KolmogorovFlow::KolmogorovFlow(int s_, double lambda_, double gamma_, double alpha_, int dim_)
    : s(s_), lambda(lambda_), gamma(gamma_), alpha(alpha_), dim(dim_) {
  if (s < 1) throw std::invalid_argument("KolmogorovFlow: s must be >= 1");
  if (lambda <= 0) throw std::invalid_argument("KolmogorovFlow: lambda must be > 0");
  if (gamma <= 0) throw std::invalid_argument("KolmogorovFlow: gamma must be > 0");
  if (alpha <= 0) throw std::invalid_argument("KolmogorovFlow: alpha must be > 0");
  if (dim != 2 && dim != 3) throw std::invalid_argument("KolmogorovFlow: dim must be 2 or 3");
}

namespace {
SpectralField shear_profile(const TorusLattice& lattice, int s, double amplitude) {
  if (lattice.cutoff < s)
    throw std::invalid_argument("shear profile: lattice cutoff below the forcing wavenumber");
  SpectralField f(lattice, lattice.dim);
  f.flags = {true, true, true};
  // amplitude * sin(s x_last) in component 0
  std::array<int, 3> kp = {0, 0, 0}, km = {0, 0, 0};
  kp[lattice.dim - 1] = s;
  km[lattice.dim - 1] = -s;
  const complex<double> half(0, -0.5);  // 1/(2i)
  f.at(kp, 0) = amplitude * half;
  f.at(km, 0) = -amplitude * half;
  return f;
}
}  // namespace

SpectralField kolmogorov_forcing(const KolmogorovFlow& f, const TorusLattice& lattice) {
  return shear_profile(lattice, f.s, f.gamma * f.lambda);
}

SpectralField kolmogorov_steady_state(const KolmogorovFlow& f, const TorusLattice& lattice) {
  return shear_profile(lattice, f.s, f.lambda / (1.0 + f.alpha * f.s * f.s));
}

void RegionParams::validate() const {
  if (!(delta > 0 && delta < 1.0 / std::sqrt(3.0)))
    throw std::invalid_argument("RegionParams: delta must lie in (0, 1/sqrt(3))");
  if (!(c2 > 0)) throw std::invalid_argument("RegionParams: c2 must be > 0");
  if (!(0 < c3 && c3 <= c4)) throw std::invalid_argument("RegionParams: need 0 < c3 <= c4");
}

bool region_A_contains(double t_prime, int r, int s, double delta) {
  const double t2 = t_prime * t_prime;
  const double rr = r;
  return t2 + rr * rr < s * s / 3.0 && t2 + (rr - s) * (rr - s) > double(s) * s &&
         t2 + (rr + s) * (rr + s) > double(s) * s && t_prime >= delta * s;
}

Eigen::MatrixXd CouplingMatrix::dense() const {
  const int n = family_size();
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int j = 0; j < n; ++j) {
    M(j, j) = gamma;
    if (j + 1 < n) M(j + 1, j) = coupling[j];
    if (j - 1 >= 0) M(j - 1, j) = -coupling[j];
  }
  return M;
}

CouplingMatrix build_tridiagonal(const KolmogorovFlow& f, double t_prime, int r, int N) {
  if (!(t_prime > 0)) throw std::invalid_argument("build_tridiagonal: t' must be > 0");
  if (std::abs(r) >= f.s) throw std::invalid_argument("build_tridiagonal: need |r| < s");
  if (N < 2) throw std::invalid_argument("build_tridiagonal: need N >= 2");
  CouplingMatrix M;
  M.gamma = f.gamma;
  M.t_prime = t_prime;
  M.r = r;
  M.s = f.s;
  M.N = N;
  M.coupling.resize(2 * N + 1);
  const double s2 = double(f.s) * f.s;
  const double pref = t_prime * f.lambda / (2.0 * (1.0 + f.alpha * s2));
  for (int n = -N; n <= N; ++n) {
    const double m = double(f.s) * n + r;
    const double k2 = t_prime * t_prime + m * m;
    M.coupling[n + N] = pref * (k2 - s2) / (k2 * (1.0 + f.alpha * k2));
  }
  return M;
}

Eigen::MatrixXd dense_vorticity_operator(const KolmogorovFlow& f, double t_prime, int cutoff) {
  if (cutoff < f.s + 3)
    throw std::invalid_argument("dense_vorticity_operator: cutoff must be >= s + 3");
  const int dim = 2 * cutoff + 1;
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(dim, dim);

  // base vorticity -lambda s cos(s x_last): harmonics +-s with coefficient -lambda s/2
  struct Mode { double kx, ky; double coef; };
  const std::vector<Mode> base = {{0.0, double(f.s), -f.lambda * f.s / 2.0},
                                  {0.0, -double(f.s), -f.lambda * f.s / 2.0}};

  const auto inv_biharmonic = [&](double kx, double ky) {  // (Lap - alpha Lap^2)^{-1}
    const double q = kx * kx + ky * ky;
    return -1.0 / (q * (1.0 + f.alpha * q));
  };
  const auto inv_helmholtz = [&](double kx, double ky) {  // (1 - alpha Lap)^{-1}
    const double q = kx * kx + ky * ky;
    return 1.0 / (1.0 + f.alpha * q);
  };
  // J(e_p, e_q) = -(p_x q_y - p_y q_x) e_{p+q}
  const auto jacobian_coef = [](double px, double py, double qx, double qy) {
    return -(px * qy - py * qx);
  };

  for (int m = -cutoff; m <= cutoff; ++m) {
    const double ox = t_prime, oy = m;
    for (const Mode& w : base) {
      // J((Lap - alpha Lap^2)^{-1} w, (1 - alpha Lap)^{-1} omega)
      {
        const double coef = w.coef * inv_biharmonic(w.kx, w.ky) * inv_helmholtz(ox, oy) *
                            jacobian_coef(w.kx, w.ky, ox, oy);
        const int mm = m + int(std::lround(w.ky));
        if (std::abs(mm) <= cutoff) L(mm + cutoff, m + cutoff) += coef;
      }
      // J((Lap - alpha Lap^2)^{-1} omega, (1 - alpha Lap)^{-1} w)
      {
        const double coef = inv_biharmonic(ox, oy) * w.coef * inv_helmholtz(w.kx, w.ky) *
                            jacobian_coef(ox, oy, w.kx, w.ky);
        const int mm = m + int(std::lround(w.ky));
        if (std::abs(mm) <= cutoff) L(mm + cutoff, m + cutoff) += coef;
      }
    }
    L(m + cutoff, m + cutoff) += f.gamma;
  }
  return L;
}

std::vector<int> dense_residue_block(int s, int r, int cutoff) {
  std::vector<int> idx;
  for (int n = -(cutoff + s); n <= cutoff + s; ++n) {
    const int m = s * n + r;
    if (std::abs(m) <= cutoff) idx.push_back(m + cutoff);
  }
  return idx;
}

namespace {
complex<double> min_real_eigenvalue(const Eigen::MatrixXd& M, Eigen::VectorXcd* vec = nullptr) {
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, vec != nullptr);
  Eigen::Index best = 0;
  es.eigenvalues().real().minCoeff(&best);
  if (vec) *vec = es.eigenvectors().col(best);
  return es.eigenvalues()[best];
}
}  // namespace

EigenResult most_unstable_eigenvalue(const KolmogorovFlow& f, double t_prime, int r) {
  EigenResult out;
  out.t_prime = t_prime;
  out.r = r;
  complex<double> prev{0, 0};
  bool have_prev = false;
  for (int N = 8; N <= 512; N *= 2) {
    const CouplingMatrix M = build_tridiagonal(f, t_prime, r, N);
    Eigen::VectorXcd vec;
    const complex<double> mu = min_real_eigenvalue(M.dense(), &vec);
    if (have_prev && std::abs(mu - prev) <= 1e-10 * std::max(1.0, std::abs(mu))) {
      out.mu = mu;
      out.unstable = mu.real() < 0;
      out.truncation = N;
      out.converged = true;
      // phase convention: center coefficient real nonnegative
      const complex<double> c0 = vec[N];
      if (std::abs(c0) > 0) vec *= std::conj(c0) / std::abs(c0);
      out.coefficients = vec / vec.cwiseAbs().maxCoeff();
      return out;
    }
    prev = mu;
    have_prev = true;
  }
  throw std::runtime_error("most_unstable_eigenvalue: no truncation convergence at N = 512");
}

std::optional<double> critical_lambda(const KolmogorovFlow& f, double t_prime, int r) {
  const auto unstable_at = [&](double lam) {
    KolmogorovFlow g = f;
    g.lambda = lam;
    return most_unstable_eigenvalue(g, t_prime, r).mu.real() < 0;
  };
  double lo = 1e-8, hi = 1e8;
  if (!unstable_at(hi)) return std::nullopt;
  if (unstable_at(lo)) return lo;
  while (hi / lo > 1.0 + 1e-6) {
    const double mid = std::sqrt(lo * hi);
    (unstable_at(mid) ? hi : lo) = mid;
  }
  return hi;
}

double critical_constant(const KolmogorovFlow& f, double, int, double lambda_star) {
  const double onealpha = 1.0 + f.alpha * f.s * f.s;
  return lambda_star * f.s / (f.gamma * onealpha * onealpha);
}

std::vector<std::array<int, 3>> unstable_triples(int s, const RegionParams& rp) {
  rp.validate();
  std::vector<std::array<int, 3>> out;
  const double lo = rp.c3 * s, hi = rp.c4 * s;
  const int amax = int(std::floor(hi));
  for (int a = 1; a <= amax; ++a) {
    for (int b = -a; b <= a; ++b) {
      const double ah = std::hypot(double(a), double(b));
      if (ah < lo || ah > hi) continue;
      for (int r = 0; r < rp.c2 * s; ++r) out.push_back({a, b, r});
    }
  }
  return out;
}

bool validate_rectangle(int s, const RegionParams& rp) {
  for (const auto& t : unstable_triples(s, rp)) {
    const double ah = std::hypot(double(t[0]), double(t[1]));
    if (!region_A_contains(ah, t[2], s, rp.delta)) return false;
  }
  return true;
}

TripleCount count_unstable_3d(int s, const RegionParams& rp) {
  TripleCount tc;
  tc.count = static_cast<long long>(unstable_triples(s, rp).size());
  tc.count_over_s3 = double(tc.count) / (double(s) * s * s);
  tc.c5 = 0.25 * EIGEN_PI * rp.c2 * (rp.c4 * rp.c4 - rp.c3 * rp.c3);
  return tc;
}

LowerBoundResult lower_bound_dimension(double alpha, double gamma, const RegionParams& rp,
                                       double c1, int verify_samples, uint64_t seed) {
  if (!(alpha > 0)) throw std::invalid_argument("lower_bound_dimension: alpha must be > 0");
  LowerBoundResult out;
  out.alpha = alpha;
  out.gamma = gamma;
  out.s = std::max(1, int(std::lround(1.0 / std::sqrt(alpha))));
  if (out.s < 4)
    throw std::invalid_argument("lower_bound_dimension: alpha too large (need s = round(alpha^{-1/2}) >= 4)");
  const double onealpha = 1.0 + alpha * out.s * out.s;
  out.lambda = std::sqrt(2.0) * c1 * gamma * onealpha * onealpha / out.s;
  const double vol = std::pow(2.0 * EIGEN_PI, 3);
  out.g_norm_sq = gamma * gamma * out.lambda * out.lambda * vol / 2.0;
  const TripleCount tc = count_unstable_3d(out.s, rp);
  out.count = tc.count;
  out.c5 = tc.c5;
  out.c6 = double(out.count) * std::pow(alpha, 2.5) * std::pow(gamma, 4) / out.g_norm_sq;
  out.c7 = 4.0 * std::sqrt(2.0) * c1;
  out.c8 = 128.0 * std::pow(EIGEN_PI, 3) * c1 * c1;

  if (verify_samples > 0) {
    if (!validate_rectangle(out.s, rp))
      throw std::runtime_error("lower_bound_dimension: rectangle leaves the instability region");
    auto triples = unstable_triples(out.s, rp);
    Rng rng(seed);
    // sample without replacement
    for (int i = int(triples.size()) - 1; i > 0; --i)
      std::swap(triples[i], triples[size_t(rng.bits() % uint64_t(i + 1))]);
    const int nver = std::min<int>(verify_samples, int(triples.size()));
    KolmogorovFlow flow(out.s, out.lambda, gamma, alpha, 3);
    for (int i = 0; i < nver; ++i) {
      const auto [a, b, r] = std::array<int, 3>(triples[i]);
      const SquireParams sq = squire_reduce(a, b, gamma);
      KolmogorovFlow reduced = flow;
      reduced.gamma = sq.gamma_hat;
      const EigenResult er = most_unstable_eigenvalue(reduced, sq.a_hat, r);
      ++out.verified_samples;
      if (er.converged && er.unstable) ++out.verified_unstable;
    }
  }
  return out;
}

}  // namespace bardina
