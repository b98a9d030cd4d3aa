#include "bardina/inequalities.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include "bardina/fft.hpp"
#include "bardina/ops.hpp"
#include "bardina/random_fields.hpp"

namespace bardina {

OrthoFamily draw_ortho_family(const TorusLattice& lattice, int components, int n, double alpha,
                              Rng& rng) {
  OrthoFamily fam;
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<SpectralField> th;
    th.reserve(n);
    for (int i = 0; i < n; ++i) {
      SpectralField f = components == lattice.dim ? random_solenoidal_field(lattice, rng)
                                                  : random_real_field(lattice, components, rng);
      rescale_alpha_norm(f, alpha, 1.0);
      th.push_back(std::move(f));
    }
    Eigen::MatrixXd G(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) G(i, j) = G(j, i) = alpha_inner(th[i], th[j], alpha);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(G);
    const double cond = es.eigenvalues()(n - 1) / std::max(es.eigenvalues()(0), 1e-300);
    if (!(cond < 1e8)) {
      ++fam.redraws;
      continue;
    }
    // theta' = L^{-1} theta with G = L L^T gives an orthonormal family
    const Eigen::MatrixXd Linv =
        Eigen::LLT<Eigen::MatrixXd>(G).matrixL().solve(Eigen::MatrixXd::Identity(n, n));
    std::vector<SpectralField> ortho;
    ortho.reserve(n);
    for (int i = 0; i < n; ++i) {
      SpectralField f(lattice, components, th[0].flags);
      for (int j = 0; j <= i; ++j) f.data() += Linv(i, j) * th[j].data();
      ortho.push_back(std::move(f));
    }
    double defect = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        defect = std::max(defect, std::abs(alpha_inner(ortho[i], ortho[j], alpha) -
                                           (i == j ? 1.0 : 0.0)));
    fam.members = std::move(ortho);
    fam.gram_defect = defect;
    return fam;
  }
  throw std::runtime_error("draw_ortho_family: persistent degeneracy in the random draws");
}

double density_l2_norm(const OrthoFamily& fam) {
  if (fam.members.empty()) return 0;
  const TorusLattice& lat = fam.members.front().lattice();
  // rho is quadratic in the modes: a 4M-exact grid integrates |rho|^2 exactly
  const detail::TorusGrid grid(lat, 4 * lat.cutoff + 2);
  Eigen::VectorXd rho = Eigen::VectorXd::Zero(grid.num_points());
  for (const SpectralField& f : fam.members)
    for (int c = 0; c < f.components(); ++c)
      rho += grid.to_grid(f.data().col(c)).real().cwiseAbs2();
  const double mean_sq = rho.cwiseAbs2().mean();
  return std::sqrt(lat.volume() * mean_sq);
}

double collective_bound(int n, double alpha, int dim, bool scalar_family) {
  const double root_n = std::sqrt(double(n));
  if (dim == 2) return root_n / (2.0 * std::sqrt(EIGEN_PI) * std::sqrt(alpha));
  const double denom = scalar_family ? std::sqrt(8.0 * EIGEN_PI) : 2.0 * std::sqrt(EIGEN_PI);
  return root_n / (denom * std::pow(alpha, 0.75));
}

CollectiveReport collective_sobolev_check(int n, double alpha, int dim,
                                          const TorusLattice& lattice, int trials, uint64_t seed) {
  if (lattice.dim != dim) throw std::invalid_argument("collective_sobolev_check: dim mismatch");
  if (n > 2 * lattice.num_modes())
    throw std::invalid_argument("collective_sobolev_check: family larger than the mode space");
  CollectiveReport rep;
  rep.n = n;
  rep.dim = dim;
  rep.alpha = alpha;
  rep.trials = trials;
  rep.seed = seed;
  const double bound_vec = collective_bound(n, alpha, dim, false);
  const double bound_sc = collective_bound(n, alpha, dim, true);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng(Rng::stream(seed, trial));
    OrthoFamily fam = draw_ortho_family(lattice, dim, n, alpha, rng);
    rep.redraws += fam.redraws;
    const double rho = density_l2_norm(fam);
    rep.max_saturation = std::max(rep.max_saturation, rho / bound_vec);
    if (rho > bound_vec * (1.0 + 1e-12)) ++rep.violations;

    OrthoFamily famsc = draw_ortho_family(lattice, 1, n, alpha, rng);
    rep.redraws += famsc.redraws;
    const double rhosc = density_l2_norm(famsc);
    rep.max_saturation_scalar = std::max(rep.max_saturation_scalar, rhosc / bound_sc);
    if (rhosc > bound_sc * (1.0 + 1e-12)) ++rep.violations;
  }
  return rep;
}

PointwiseReport pointwise_inequality_check(int dim, long long trials, uint64_t seed) {
  if (dim != 2 && dim != 3) throw std::invalid_argument("pointwise_inequality_check: dim");
  PointwiseReport rep;
  rep.dim = dim;
  rep.trials = trials;
  rep.seed = seed;
  const double factor = std::sqrt(double(dim - 1) / dim);
  Rng rng(seed);
  Eigen::MatrixXd G(dim, dim), A(dim, dim);
  Eigen::VectorXd th(dim);
  for (long long trial = 0; trial < trials; ++trial) {
    for (int i = 0; i < dim; ++i) {
      th[i] = rng.gaussian();
      for (int j = 0; j < dim; ++j) G(i, j) = rng.gaussian();
    }
    G.diagonal().array() -= G.trace() / dim;  // solenoidal gradient: trace free
    const double lhs = std::abs(th.dot(G * th));
    const double rhs = factor * th.squaredNorm() * G.norm();
    rep.max_saturation = std::max(rep.max_saturation, lhs / std::max(rhs, 1e-300));
    if (lhs > rhs * (1.0 + 1e-12)) ++rep.violations;

    if (trial % 97 == 0) {  // matrix-norm bound for the symmetric part
      A = 0.5 * (G + G.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
      const double opnorm2 = std::max(es.eigenvalues().cwiseAbs().maxCoeff(), 0.0);
      if (opnorm2 * opnorm2 >
          (double(dim - 1) / dim) * A.squaredNorm() * (1.0 + 1e-12))
        rep.matrix_violations += 1;
    }
  }
  // equality case: spectrum (1, -1/(d-1), ..., -1/(d-1)) saturates the bound
  A.setZero();
  A(0, 0) = 1.0;
  for (int i = 1; i < dim; ++i) A(i, i) = -1.0 / (dim - 1);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A, Eigen::EigenvaluesOnly);
  const double opnorm = es.eigenvalues().cwiseAbs().maxCoeff();
  rep.equality_defect =
      std::abs(opnorm * opnorm - (double(dim - 1) / dim) * A.squaredNorm());
  return rep;
}

}  // namespace bardina
