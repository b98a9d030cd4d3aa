#include "bardina/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Eigenvalues>

#include "bardina/bounds.hpp"
#include "bardina/dynamics.hpp"
#include "bardina/inequalities.hpp"
#include "bardina/io.hpp"
#include "bardina/kolmogorov.hpp"
#include "bardina/lattice_sums.hpp"
#include "bardina/ops.hpp"
#include "bardina/random_fields.hpp"
#include "bardina/squire.hpp"

namespace bardina {

using nlohmann::json;

namespace checks {

namespace {
constexpr double kPi2 = std::numbers::pi * std::numbers::pi;

/// rectangle wide enough to hold >= 16 triples at s = 8, still inside A(delta)
RegionParams lift_rectangle() { return RegionParams{0.5, 0.13, 0.5, 0.56}; }
}  // namespace

CheckResult lattice_anchor() {
  CheckResult out{"lattice/F1-anchor", false, {}};
  const double reference = kPi2 * 1.01306 - 1.0;
  const LatticeSumResult d = F_direct(1.0, 1e-10);
  const LatticeSumResult p = F_poisson(1.0, 1e-10);
  out.info["reference"] = reference;
  out.info["direct"] = d.value;
  out.info["poisson"] = p.value;
  out.info["direct_tail"] = d.tail_bound;
  out.pass = std::abs(d.value - reference) < 1e-4 && std::abs(p.value - reference) < 1e-4;
  return out;
}

CheckResult lattice_cross_agreement(const std::vector<double>& grid, double need, double tol) {
  CheckResult out{"lattice/direct-vs-poisson", false, {}};
  double worst = 0;
  for (double m : grid) {
    const double d = F_direct(m, tol).value;
    const double p = F_poisson(m, tol).value;
    worst = std::max(worst, std::abs(d - p));
  }
  out.info["points"] = grid.size();
  out.info["max_abs_diff"] = worst;
  out.info["required"] = need;
  out.pass = worst < need;
  return out;
}

CheckResult lattice_below_pi2(int points, double lo, double hi) {
  CheckResult out{"lattice/F-below-pi2", false, {}};
  double max_ratio = 0, min_margin = 1e300;
  for (double m : log_grid(lo, hi, points)) {
    const double f = F_best(m, 1e-9).value;
    max_ratio = std::max(max_ratio, f / kPi2);
    min_margin = std::min(min_margin, kPi2 - f);
  }
  out.info["points"] = points;
  out.info["max_ratio"] = max_ratio;
  out.info["min_margin"] = min_margin;  // reported, not asserted beyond positivity
  out.pass = max_ratio < 1.0;
  return out;
}

CheckResult lattice_g0() {
  CheckResult out{"lattice/G0-ledger", false, {}};
  const G0Report rep = g0_ledger();
  out.info["g0_at_1"] = rep.g0_at_1;
  out.info["decreasing_on_1_10"] = rep.decreasing_on_1_10;
  out.info["lemma_chain_value"] = rep.lemma_chain_value;
  out.info["max_first"] = rep.max_first;
  out.info["max_first_exact"] = rep.max_first_exact;
  out.info["max_second"] = rep.max_second;
  out.info["max_second_exact"] = rep.max_second_exact;
  out.pass = rep.pass;
  return out;
}

CheckResult lattice_est_lat(int points) {
  CheckResult out{"lattice/green-vs-reference", false, {}};
  const auto grid = log_grid(1e-2, 1e2, points);
  const bool ok2 = check_est_lat(grid, 2);
  const bool ok3 = check_est_lat(grid, 3);
  out.info["points"] = points;
  out.info["d2"] = ok2;
  out.info["d3"] = ok3;
  out.pass = ok2 && ok3;
  return out;
}

CheckResult spectral_properties(uint64_t seed) {
  CheckResult out{"spectral/operator-properties", false, {}};
  bool ok = true;
  json detail;
  for (int dim : {2, 3}) {
    Rng rng(Rng::stream(seed, dim));
    const TorusLattice lat(dim, dim == 2 ? 6 : 4);
    SpectralField f = random_real_field(lat, dim, rng);
    const double fscale = std::sqrt(l2_norm_sq(f));

    SpectralField pf = leray_project(f);
    const double idem = std::sqrt(l2_norm_sq(leray_project(pf) - pf)) / fscale;
    const double sol = max_divergence(pf) / fscale;

    const double alpha = 0.07;
    SpectralField a = helmholtz_filter(leray_project(f), alpha);
    SpectralField b = leray_project(helmholtz_filter(f, alpha));
    const double commute = (a.data() - b.data()).cwiseAbs().maxCoeff();

    SpectralField u = random_solenoidal_field(lat, rng);
    SpectralField th = random_solenoidal_field(lat, rng);
    const double canc = std::abs(alpha_inner(bardina_nonlinearity(u, th, alpha), th, alpha)) /
                        (std::sqrt(alpha_norm_sq(u, alpha)) * alpha_norm_sq(th, alpha));

    const double reality = conjugate_symmetry_defect(bardina_nonlinearity(u, u, alpha));

    // Parseval: |curl f|^2 + |div f|^2 = |grad f|^2 for zero-mean fields
    double div2 = 0;
    for (Eigen::Index i = 0; i < lat.num_modes(); ++i) {
      auto k = lat.wavevector(i);
      std::complex<double> d = 0;
      for (int c = 0; c < dim; ++c) d += double(k[c]) * f.at(i, c);
      div2 += std::norm(d);
    }
    div2 *= lat.volume();
    const double parseval =
        std::abs(l2_norm_sq(curl(f)) + div2 - grad_norm_sq(f)) / grad_norm_sq(f);

    json d2;
    d2["leray_idempotence"] = idem;
    d2["solenoidality"] = sol;
    d2["filter_project_commute"] = commute;
    d2["cancellation"] = canc;
    d2["reality_defect"] = reality;
    d2["parseval_rel"] = parseval;
    detail[dim == 2 ? "d2" : "d3"] = d2;
    ok = ok && idem < 1e-13 && sol < 1e-12 && commute < 1e-14 && canc < 1e-10 &&
         reality < 1e-12 && parseval < 1e-10;
  }
  out.info = detail;
  out.pass = ok;
  return out;
}

CheckResult field_roundtrip(uint64_t seed) {
  CheckResult out{"spectral/serialization-roundtrip", false, {}};
  Rng rng(seed);
  const TorusLattice lat(3, 3);
  SpectralField f = random_solenoidal_field(lat, rng);
  const SpectralField g = field_from_json(field_to_json(f));
  const double diff = (f.data() - g.data()).cwiseAbs().maxCoeff();
  out.info["max_diff"] = diff;
  out.pass = diff == 0.0 && g.flags.divergence_free == f.flags.divergence_free &&
             g.flags.zero_mean == f.flags.zero_mean && g.flags.real_valued == f.flags.real_valued;
  return out;
}

CheckResult dynamics_steady(int M, int s, double T, double dt) {
  CheckResult out{"dynamics/kolmogorov-steady-state", false, {}};
  const TorusLattice lat(3, M);
  const double alpha = 1.0 / (double(s) * s);
  const KolmogorovFlow flow(s, 1.0, 1.0, alpha, 3);
  const SpectralField u0 = kolmogorov_steady_state(flow, lat);
  const PhysicsParams p(alpha, flow.gamma, kolmogorov_forcing(flow, lat));

  const double rhs_norm = std::sqrt(alpha_norm_sq(rhs(u0, p), alpha));
  SimulateOptions opt;
  opt.dt = dt;
  const TrajectoryRecord rec = simulate(u0, p, T, opt);
  const double drift =
      std::sqrt(alpha_norm_sq(rec.final_state - u0, alpha) / alpha_norm_sq(u0, alpha));
  out.info["rhs_norm"] = rhs_norm;
  out.info["relative_drift"] = drift;
  out.info["T"] = T;
  out.pass = rhs_norm < 1e-12 && drift < 1e-10;
  return out;
}

CheckResult dynamics_decay(uint64_t seed) {
  CheckResult out{"dynamics/unforced-decay", false, {}};
  Rng rng(seed);
  const TorusLattice lat(3, 4);
  SpectralField u0 = random_solenoidal_field(lat, rng);
  const double alpha = 0.1;
  rescale_alpha_norm(u0, alpha, 1.0);
  SpectralField zero(lat, 3, FieldFlags{true, true, true});
  const PhysicsParams p(alpha, 0.7, zero);
  SimulateOptions opt;
  opt.dt = 0.01;
  const TrajectoryRecord rec = simulate(u0, p, 2.0, opt);
  double worst = 0;
  for (std::size_t i = 0; i < rec.samples(); ++i) {
    const double bound = rec.energy_alpha.front() * std::exp(-2.0 * p.gamma * rec.t[i]);
    worst = std::max(worst, rec.energy_alpha[i] / (bound * (1.0 + 1e-6)));
  }
  out.info["max_over_envelope"] = worst;
  out.info["dissipative"] = check_dissipative(rec, p);
  out.info["avg_gradient"] = time_avg_gradient(rec);
  out.info["initial_gradient"] = rec.grad_norm.front();
  out.pass = worst <= 1.0 && check_dissipative(rec, p) &&
             time_avg_gradient(rec) <= rec.grad_norm.front() * (1.0 + 1e-9);
  return out;
}

CheckResult dynamics_dissipative_fuzz(int runs3d, int runs2d, int M3, int M2, double T,
                                      double dt, uint64_t seed) {
  CheckResult out{"dynamics/dissipative-fuzz", false, {}};
  int failures = 0, vort_failures = 0, grad_failures = 0;
  json runs = json::array();
  const int total = runs3d + runs2d;
  for (int runi = 0; runi < total; ++runi) {
    const bool is3d = runi < runs3d;
    Rng rng(Rng::stream(seed, 100 + runi));
    const TorusLattice lat(is3d ? 3 : 2, is3d ? M3 : M2);
    const double alpha = 0.02 + 0.3 * rng.uniform();
    const double gamma = 0.5 + 1.5 * rng.uniform();
    SpectralField u0 = random_solenoidal_field(lat, rng);
    rescale_alpha_norm(u0, alpha, 0.5 + rng.uniform());
    SpectralField g = random_solenoidal_field(lat, rng);
    g *= (0.5 + rng.uniform()) * gamma / std::sqrt(l2_norm_sq(g));
    const PhysicsParams p(alpha, gamma, g);
    SimulateOptions opt;
    opt.dt = dt;
    const TrajectoryRecord rec = simulate(u0, p, T, opt);
    const bool diss = check_dissipative(rec, p);
    const bool grad =
        time_avg_gradient(rec) <= gradient_average_bound(rec, p) * (1.0 + 1e-3);
    bool vort = true;
    if (!is3d) vort = vorticity_estimate_2d(rec, p);
    failures += diss ? 0 : 1;
    grad_failures += grad ? 0 : 1;
    vort_failures += vort ? 0 : 1;
    runs.push_back({{"dim", lat.dim},
                    {"alpha", alpha},
                    {"gamma", gamma},
                    {"dissipative", diss},
                    {"gradient_avg_ok", grad},
                    {"vorticity_ok", vort}});
  }
  out.info["runs"] = runs;
  out.info["dissipative_failures"] = failures;
  out.info["gradient_failures"] = grad_failures;
  out.info["vorticity_failures"] = vort_failures;
  out.pass = failures == 0 && vort_failures == 0 && grad_failures == 0;
  return out;
}

CheckResult dynamics_energy_residual(double dt, double T, uint64_t seed) {
  CheckResult out{"dynamics/energy-identity-residual", false, {}};
  Rng rng(seed);
  const TorusLattice lat(2, 16);
  const double alpha = 0.05, gamma = 1.0;
  SpectralField u0 = random_solenoidal_field(lat, rng);
  rescale_alpha_norm(u0, alpha, 1.0);
  SpectralField g = random_solenoidal_field(lat, rng);
  g *= gamma / std::sqrt(l2_norm_sq(g));
  const PhysicsParams p(alpha, gamma, g);

  SimulateOptions opt;
  opt.dt = dt;
  const TrajectoryRecord rec1 = simulate(u0, p, T, opt);
  opt.dt = dt / 2;
  const TrajectoryRecord rec2 = simulate(u0, p, T, opt);

  const double peak = *std::max_element(rec1.energy_alpha.begin(), rec1.energy_alpha.end());
  const double r1 = energy_residual(rec1, p);
  const double r2 = energy_residual(rec2, p);
  const double order_ratio = r1 / r2;

  // steady trajectory: residual at rounding level
  const KolmogorovFlow flow(2, 1.0, gamma, 0.25, 3);
  const TorusLattice lat3(3, 4);
  const PhysicsParams ps(0.25, gamma, kolmogorov_forcing(flow, lat3));
  SimulateOptions sopt;
  sopt.dt = 0.01;
  const TrajectoryRecord recs = simulate(kolmogorov_steady_state(flow, lat3), ps, 0.1, sopt);
  const double steady_res = energy_residual(recs, ps);

  out.info["residual"] = r1;
  out.info["peak_energy"] = peak;
  out.info["residual_over_peak"] = r1 / peak;
  out.info["half_step_residual"] = r2;
  out.info["order_ratio"] = order_ratio;
  out.info["steady_residual"] = steady_res;
  out.pass = r1 < 1e-6 * peak && order_ratio > 2.8 && order_ratio < 5.5 && steady_res < 1e-10;
  return out;
}

CheckResult eigen_oracle_agreement(int configs, uint64_t seed) {
  CheckResult out{"eigen/tridiagonal-vs-dense-oracle", false, {}};
  double worst_entry = 0, worst_eig = 0;
  int done = 0;
  for (int c = 0; c < configs; ++c) {
    Rng rng(Rng::stream(seed, 900 + c));
    const int s = 4 + int(rng.bits() % 13);          // 4..16
    const double alpha = 0.002 + 0.3 * rng.uniform();
    const double gamma = 0.3 + 2.7 * rng.uniform();
    const double lambda = 0.1 + 20.0 * rng.uniform();
    const int r = int(rng.bits() % uint64_t(s));      // 0..s-1
    const double t_prime = 0.3 + (s - 0.6) * rng.uniform();
    const KolmogorovFlow flow(s, lambda, gamma, alpha, 2);

    const EigenResult er = most_unstable_eigenvalue(flow, t_prime, r);
    const int N = er.truncation;
    const CouplingMatrix tri = build_tridiagonal(flow, t_prime, r, N);
    const Eigen::MatrixXd dense = dense_vorticity_operator(flow, t_prime, s * (N + 1) + std::abs(r) + 2);
    const int cutoff = (dense.rows() - 1) / 2;
    // same family, assembled the long way
    Eigen::MatrixXd block(2 * N + 1, 2 * N + 1);
    for (int i = -N; i <= N; ++i)
      for (int j = -N; j <= N; ++j)
        block(i + N, j + N) = dense(s * i + r + cutoff, s * j + r + cutoff);
    worst_entry = std::max(worst_entry, (block - tri.dense()).cwiseAbs().maxCoeff());

    Eigen::EigenSolver<Eigen::MatrixXd> es(block, false);
    Eigen::Index bi = 0;
    es.eigenvalues().real().minCoeff(&bi);
    const std::complex<double> mu_block = es.eigenvalues()[bi];
    worst_eig = std::max(worst_eig,
                         std::abs(mu_block - er.mu) / std::max(1e-30, std::abs(er.mu)));
    ++done;
  }
  out.info["configs"] = done;
  out.info["max_entry_diff"] = worst_entry;
  out.info["max_eigen_rel_diff"] = worst_eig;
  out.pass = worst_entry < 1e-12 && worst_eig < 1e-9;
  return out;
}

CheckResult eigen_supercritical_structure() {
  CheckResult out{"eigen/supercritical-real-multiplicity-2", false, {}};
  const int s = 8;
  const double alpha = 1.0 / 64, gamma = 1.0;
  const double lambda2_est = kDefaultC1 * gamma * std::pow(1.0 + alpha * s * s, 2) / s;
  const KolmogorovFlow flow(s, 10.0 * lambda2_est, gamma, alpha, 2);
  const double t_prime = 4.0;
  const int r = 0;
  const EigenResult er = most_unstable_eigenvalue(flow, t_prime, r);

  // simplicity within the family
  const CouplingMatrix tri = build_tridiagonal(flow, t_prime, r, er.truncation);
  Eigen::EigenSolver<Eigen::MatrixXd> es(tri.dense(), false);
  int close = 0;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i] - er.mu) < 1e-6 * std::max(1.0, std::abs(er.mu))) ++close;

  // the conjugate family carries the second copy
  const CouplingMatrix tri2 = build_tridiagonal(flow, t_prime, -r, er.truncation);
  Eigen::MatrixXd m2 = tri2.dense();
  // mirrored streamwise wavenumber flips every coupling sign; similarity by
  // alternating signs keeps the spectrum
  Eigen::EigenSolver<Eigen::MatrixXd> es2(m2, false);
  int close2 = 0;
  for (Eigen::Index i = 0; i < es2.eigenvalues().size(); ++i)
    if (std::abs(es2.eigenvalues()[i] - er.mu) < 1e-6 * std::max(1.0, std::abs(er.mu))) ++close2;

  out.info["mu_real"] = er.mu.real();
  out.info["mu_imag"] = er.mu.imag();
  out.info["unstable"] = er.unstable;
  out.info["copies_in_family"] = close;
  out.info["copies_in_conjugate_family"] = close2;
  out.pass = er.unstable && std::abs(er.mu.imag()) < 1e-10 && close == 1 && close2 == 1;
  return out;
}

CheckResult eigen_streamwise_zero() {
  CheckResult out{"eigen/zero-streamwise-stability", false, {}};
  const KolmogorovFlow flow(5, 7.0, 0.8, 0.04, 2);
  const Eigen::MatrixXd L = dense_vorticity_operator(flow, 0.0, 24);
  Eigen::EigenSolver<Eigen::MatrixXd> es(L, false);
  const double min_re = es.eigenvalues().real().minCoeff();
  out.info["min_real_part"] = min_re;
  out.info["gamma"] = flow.gamma;
  out.pass = min_re >= flow.gamma - 1e-10;
  return out;
}

CheckResult eigen_scaling_identity(uint64_t seed) {
  CheckResult out{"eigen/amplitude-damping-scaling", false, {}};
  Rng rng(seed);
  const int s = 6;
  const double alpha = 0.05, t_prime = 2.7;
  const int r = 1;
  const double gamma = 0.6 + rng.uniform(), lambda = 0.5 + 4.0 * rng.uniform();
  const KolmogorovFlow f1(s, lambda, gamma, alpha, 2);
  KolmogorovFlow funit = f1;
  funit.lambda = 1.0;
  const int N = 12;
  const Eigen::MatrixXd M = build_tridiagonal(f1, t_prime, r, N).dense();
  Eigen::MatrixXd T1 = build_tridiagonal(funit, t_prime, r, N).dense();
  T1.diagonal().array() -= gamma;  // bare coupling at unit amplitude
  const Eigen::MatrixXd rebuilt =
      gamma * (Eigen::MatrixXd::Identity(2 * N + 1, 2 * N + 1) + (lambda / gamma) * T1);
  const double diff = (M - rebuilt).cwiseAbs().maxCoeff();
  out.info["max_entry_diff"] = diff;
  out.pass = diff < 1e-12;
  return out;
}

CheckResult critical_lambda_checks(bool full) {
  CheckResult out{"eigen/critical-amplitude", false, {}};
  const int s = 8;
  const double alpha = 1.0 / 64;
  const double t_prime = 4.0;
  const int r = 0;
  const KolmogorovFlow f1(s, 1.0, 1.0, alpha, 2);
  KolmogorovFlow f2 = f1;
  f2.gamma = 2.0;
  const auto l1 = critical_lambda(f1, t_prime, r);
  const auto l2 = critical_lambda(f2, t_prime, r);
  bool ok = l1 && l2 && std::abs(*l2 / *l1 - 2.0) < 1e-4;
  out.info["lambda_star"] = l1 ? *l1 : -1.0;
  out.info["lambda_star_double_gamma"] = l2 ? *l2 : -1.0;

  if (full) {
    // threshold constant stabilizes across scales
    double prev_sup = 0;
    json sups = json::array();
    double overall_min = 1e300, overall_max = 0;
    for (int sv : {8, 16, 32}) {
      const double av = 1.0 / (double(sv) * sv);
      const KolmogorovFlow fv(sv, 1.0, 1.0, av, 2);
      RegionParams rp;  // defaults
      double sup = 0;
      std::set<std::pair<double, int>> pairs;
      for (const auto& t : unstable_triples(sv, rp))
        pairs.insert({std::hypot(double(t[0]), double(t[1])), t[2]});
      for (const auto& [tp, rr] : pairs) {
        const auto ls = critical_lambda(fv, tp, rr);
        if (ls) sup = std::max(sup, critical_constant(fv, tp, rr, *ls));
      }
      sups.push_back({{"s", sv}, {"sup_c1_hat", sup}});
      overall_min = std::min(overall_min, sup);
      overall_max = std::max(overall_max, sup);
      prev_sup = sup;
    }
    out.info["sup_by_s"] = sups;
    out.info["variation"] = (overall_max - overall_min) / overall_max;
    out.info["default_c1"] = kDefaultC1;
    ok = ok && (overall_max - overall_min) / overall_max < 0.25 &&
         kDefaultC1 >= 1.9 * overall_max;
  }
  out.pass = ok;
  return out;
}

CheckResult squire_lift_batch(int wanted) {
  CheckResult out{"squire/lift-residuals", false, {}};
  const int s = 8;
  const double alpha = 1.0 / 64, gamma = 1.0;
  const RegionParams rp = lift_rectangle();
  if (!validate_rectangle(s, rp)) {
    out.info["rectangle_valid"] = false;
    return out;
  }
  const double lambda3 =
      std::sqrt(2.0) * kDefaultC1 * gamma * std::pow(1.0 + alpha * s * s, 2) / s;
  const KolmogorovFlow flow(s, lambda3, gamma, alpha, 3);
  auto triples = unstable_triples(s, rp);
  if ((int)triples.size() > wanted) triples.resize(wanted);
  double worst_res = 0, worst_div = 0, worst_cond = 0;
  int unstable = 0;
  json rows = json::array();
  for (const auto& t : triples) {
    const auto [a, b, r] = t;
    const SquireParams sq = squire_reduce(a, b, gamma);
    KolmogorovFlow reduced = flow;
    reduced.gamma = sq.gamma_hat;
    const EigenResult er = most_unstable_eigenvalue(reduced, sq.a_hat, r);
    if (er.unstable) ++unstable;
    const LiftedMode lm = squire_lift(er, a, b, flow, er.truncation);
    worst_res = std::max(worst_res, lm.residual);
    worst_div = std::max(worst_div, lm.divergence);
    worst_cond = std::max(worst_cond, lm.condition);
    rows.push_back({{"a", a}, {"b", b}, {"r", r},
                    {"mu", er.mu.real()},
                    {"residual", lm.residual},
                    {"divergence", lm.divergence}});
  }
  out.info["triples"] = rows;
  out.info["count"] = triples.size();
  out.info["all_unstable"] = unstable == (int)triples.size();
  out.info["max_residual"] = worst_res;
  out.info["max_divergence"] = worst_div;
  out.info["max_condition"] = worst_cond;
  out.pass = unstable == (int)triples.size() && worst_res < 1e-8 && worst_div < 1e-10 &&
             (int)triples.size() >= wanted;
  return out;
}

CheckResult counting(bool include_s400) {
  CheckResult out{"counting/asymptotic-constant", false, {}};
  RegionParams rp;  // defaults
  const TripleCount c100 = count_unstable_3d(100, rp);
  const double rel100 = std::abs(c100.count_over_s3 - c100.c5) / c100.c5;
  out.info["s100"] = {{"count", c100.count},
                      {"count_over_s3", c100.count_over_s3},
                      {"c5", c100.c5},
                      {"rel_err", rel100}};
  bool ok = rel100 < 0.10;
  if (include_s400) {
    const TripleCount c400 = count_unstable_3d(400, rp);
    const double rel400 = std::abs(c400.count_over_s3 - c400.c5) / c400.c5;
    out.info["s400"] = {{"count", c400.count},
                        {"count_over_s3", c400.count_over_s3},
                        {"rel_err", rel400}};
    ok = ok && rel400 < 0.03;
  }
  // degenerate annulus grows sub-cubically
  RegionParams deg = rp;
  deg.c4 = deg.c3;
  const TripleCount d1 = count_unstable_3d(100, deg);
  const TripleCount d2 = count_unstable_3d(200, deg);
  out.info["degenerate_growth"] =
      d1.count > 0 ? double(d2.count) / double(d1.count) : 0.0;
  ok = ok && double(d2.count) < 4.0 * double(std::max<long long>(d1.count, 1));
  // monotone in c2 and c4
  RegionParams wider = rp;
  wider.c2 *= 1.5;
  RegionParams fatter = rp;
  fatter.c4 += 0.03;
  ok = ok && count_unstable_3d(64, wider).count >= count_unstable_3d(64, rp).count &&
       count_unstable_3d(64, fatter).count >= count_unstable_3d(64, rp).count;
  out.pass = ok;
  return out;
}

CheckResult bounds_identities() {
  CheckResult out{"bounds/closed-form-identities", false, {}};
  bool ok = true;
  // coefficient isolation
  const double u3 = upper_bound_3d(std::sqrt(12.0 * EIGEN_PI), 1.0, 1.0);
  const double u2 = upper_bound_2d(std::sqrt(16.0 * EIGEN_PI), 1.0, 1.0);
  const double uv = upper_bound_2d_vorticity(std::sqrt(8.0 * EIGEN_PI), 1.0, 1.0);
  ok = ok && std::abs(u3 - 1.0) < 1e-12 && std::abs(u2 - 1.0) < 1e-12 &&
       std::abs(uv - 1.0) < 1e-12;
  // gamma^{-4} scaling
  ok = ok && std::abs(upper_bound_3d(1.0, 1.0, 2.0) * 16.0 - upper_bound_3d(1.0, 1.0, 1.0)) < 1e-15;
  // n* from the root of q reproduces the closed-form coefficient
  const double alpha = 1.0 / 64, gamma = 1.3, g = 2.7;
  const double K = q_sqrt_coefficient_forcing(g, gamma, alpha);
  const double coeff = (K / gamma) * (K / gamma) * std::pow(alpha, 2.5) * std::pow(gamma, 4) / (g * g);
  out.info["nstar_coefficient"] = coeff;
  out.info["coeff_3d"] = kCoeff3d;
  ok = ok && std::abs(coeff - kCoeff3d) < 1e-15;
  ok = ok && n_star(0.0, gamma) == 1 && n_star(3.0, 1.0) == 9;
  // q shape: concave, negative beyond the root
  const long long ns = n_star(K, gamma);
  ok = ok && q_of_n_forcing(ns, g, gamma, alpha) <= 1e-9 &&
       q_of_n_forcing(ns + 1, g, gamma, alpha) < 0;
  // vorticity form beats the plain 2D bound iff 2 alpha s^2 > 1 (single shear mode)
  {
    const double gn = 1.0;
    for (double a2 : {0.003, 0.02, 0.08}) {
      for (int s : {2, 5}) {
        const double plain = upper_bound_2d(gn, a2, 1.0);
        const double vort = upper_bound_2d_vorticity(s * gn, a2, 1.0);  // |rot g| = s|g|
        const bool vort_better = vort < plain;
        ok = ok && (vort_better == (2.0 * a2 * s * s > 1.0));
      }
    }
  }
  // the two dimensionless 2D lower-bound forms coincide at s = alpha^{-1/2}
  {
    const double a2 = 1.0 / 36.0;
    const int s = 6;
    const double g2 = 1.7;                   // |g|^2, arbitrary
    const double rot2 = double(s) * s * g2;  // single-mode forcing
    const double form1 = rot2 / (a2 * 1.0);
    const double form2 = g2 / (a2 * a2 * 1.0);
    out.info["forms_2d_ratio"] = form1 / form2;
    ok = ok && std::abs(form1 / form2 - 1.0) < 1e-12;
  }
  out.pass = ok;
  return out;
}

CheckResult bounds_consistency(const std::vector<int>& s_list, double c1) {
  CheckResult out{"bounds/two-sided-consistency", false, {}};
  RegionParams rp;  // defaults
  const BoundReport rep = consistency_report(1.0, rp, c1, s_list);
  json rows = json::array();
  for (const auto& r : rep.rows)
    rows.push_back({{"s", r.s},
                    {"alpha", r.alpha},
                    {"g_norm_sq", r.g_norm_sq},
                    {"upper", r.upper},
                    {"count", r.count},
                    {"lower_asymptotic", r.lower_asymptotic},
                    {"c6", r.c6},
                    {"ratio_form", r.ratio_form},
                    {"ratio_count", r.ratio_count},
                    {"n_star", r.nstar}});
  out.info["rows"] = rows;
  out.info["slope_upper"] = rep.slope_upper;
  out.info["slope_lower"] = rep.slope_lower;
  out.info["nstar_coefficient"] = rep.nstar_coefficient;
  out.info["min_ratio_form"] = rep.min_ratio_form;
  out.info["min_ratio_count"] = rep.min_ratio_count;
  out.info["ratio_form_variation"] =
      (rep.max_ratio_form - rep.min_ratio_form) / rep.max_ratio_form;
  out.pass = std::abs(rep.slope_upper + 1.5) < 0.05 && std::abs(rep.slope_lower + 1.5) < 0.05 &&
             rep.min_ratio_form >= 1.0 && rep.min_ratio_count >= 1.0 &&
             std::abs(rep.nstar_coefficient - kCoeff3d) < 1e-15;
  return out;
}

CheckResult pointwise_fuzz(int dim, long long trials, uint64_t seed) {
  CheckResult out{"inequalities/pointwise-inertial", false, {}};
  const PointwiseReport rep = pointwise_inequality_check(dim, trials, seed);
  out.info["dim"] = dim;
  out.info["trials"] = trials;
  out.info["violations"] = rep.violations;
  out.info["matrix_violations"] = rep.matrix_violations;
  out.info["max_saturation"] = rep.max_saturation;
  out.info["equality_defect"] = rep.equality_defect;
  out.pass = rep.pass();
  return out;
}

CheckResult collective_fuzz(const std::vector<int>& family_sizes,
                            const std::vector<double>& alphas, int dim, int M, int trials,
                            uint64_t seed) {
  CheckResult out{"inequalities/collective-sobolev", false, {}};
  const TorusLattice lat(dim, M);
  json rows = json::array();
  int violations = 0;
  for (int n : family_sizes)
    for (double alpha : alphas) {
      const CollectiveReport rep = collective_sobolev_check(n, alpha, dim, lat, trials, seed);
      violations += rep.violations;
      rows.push_back({{"n", n},
                      {"alpha", alpha},
                      {"trials", trials},
                      {"violations", rep.violations},
                      {"max_saturation", rep.max_saturation},
                      {"max_saturation_scalar", rep.max_saturation_scalar},
                      {"redraws", rep.redraws}});
    }
  out.info["rows"] = rows;
  out.info["violations"] = violations;
  out.pass = violations == 0;
  return out;
}

}  // namespace checks

json VerifyReport::payload() const {
  json j;
  j["checks"] = json::array();
  for (const auto& r : results)
    j["checks"].push_back({{"name", r.name}, {"pass", r.pass}, {"info", r.info}});
  j["violations"] = violations;
  return j;
}

VerifyReport run_verify(const RunConfig& cfg) {
  using namespace checks;
  const bool q = cfg.quick;
  VerifyReport rep;
  auto add = [&](CheckResult r) {
    if (!r.pass) ++rep.violations;
    rep.results.push_back(std::move(r));
  };

  add(lattice_anchor());
  add(lattice_cross_agreement(log_grid(0.5, q ? 20.0 : 100.0, q ? 5 : 15), 1e-10, 1e-11));
  add(lattice_below_pi2(q ? 50 : 200, 1e-2, 1e2));
  add(lattice_g0());
  add(lattice_est_lat(q ? 12 : 40));

  add(spectral_properties(cfg.seed));
  add(field_roundtrip(cfg.seed));

  add(dynamics_steady(4, 2, q ? 2.0 : 10.0, 0.02));
  add(dynamics_decay(cfg.seed));
  add(dynamics_dissipative_fuzz(q ? 2 : 6, q ? 2 : 6, q ? 4 : 8, q ? 8 : 16, q ? 0.5 : 1.0,
                                0.02, cfg.seed));
  add(dynamics_energy_residual(1e-3, q ? 0.1 : 0.3, cfg.seed));

  add(eigen_oracle_agreement(q ? 8 : 50, cfg.seed));
  add(eigen_supercritical_structure());
  add(eigen_streamwise_zero());
  add(eigen_scaling_identity(cfg.seed));
  add(critical_lambda_checks(!q));

  add(squire_lift_batch(q ? 3 : 10));
  add(counting(!q));
  add(bounds_identities());
  add(bounds_consistency(q ? std::vector<int>{8, 16, 32} : cfg.s_list, cfg.c1));

  add(pointwise_fuzz(3, q ? 100000 : cfg.pointwise_trials, cfg.seed));
  add(pointwise_fuzz(2, q ? 50000 : cfg.pointwise_trials / 4, cfg.seed + 1));
  add(collective_fuzz(q ? std::vector<int>{1, 4} : std::vector<int>{1, 4, 16},
                      q ? std::vector<double>{0.1} : std::vector<double>{0.1, 0.01}, 3, 4,
                      q ? 20 : cfg.trials, cfg.seed));

  return rep;
}

}  // namespace bardina
