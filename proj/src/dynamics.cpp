#include "bardina/dynamics.hpp"

#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bardina/ops.hpp"

namespace bardina {

PhysicsParams::PhysicsParams(double alpha_, double gamma_, SpectralField g)
    : alpha(alpha_), gamma(gamma_), forcing(std::move(g)) {
  if (alpha <= 0) throw std::invalid_argument("PhysicsParams: alpha must be > 0");
  if (gamma <= 0) throw std::invalid_argument("PhysicsParams: gamma must be > 0");
  if (mean_magnitude(forcing) > 1e-12)
    throw std::invalid_argument("PhysicsParams: forcing must have zero mean");
}

SpectralField rhs(const SpectralField& u, const PhysicsParams& p) {
  if (u.lattice() != p.forcing.lattice())
    throw std::invalid_argument("rhs: state and forcing lattices differ");
  SpectralField g = p.forcing;
  g.flags.zero_mean = true;
  SpectralField out = helmholtz_filter(leray_project(g), p.alpha);
  out -= bardina_nonlinearity(u, u, p.alpha);
  out -= p.gamma * u;
  out.flags = u.flags;
  return out;
}

double default_time_step(const SpectralField& u0, const PhysicsParams& p) {
  const int M = u0.lattice().cutoff;
  const double U = std::max(sup_norm_bound(u0), 1e-8);
  return std::min(0.05 / p.gamma, 0.5 * (1.0 + p.alpha * M * M) / (M * U));
}

namespace {

void record_sample(TrajectoryRecord& rec, double t, const SpectralField& u,
                   const PhysicsParams& p) {
  rec.t.push_back(t);
  rec.energy_alpha.push_back(alpha_norm_sq(u, p.alpha));
  rec.grad_norm.push_back(std::sqrt(grad_norm_sq(u)));
  rec.forcing_work.push_back(l2_inner(p.forcing, u));
  if (u.lattice().dim == 2)
    rec.vort_energy_alpha.push_back(alpha_norm_sq(curl(u), p.alpha));
}

}  // namespace

TrajectoryRecord simulate(const SpectralField& u0, const PhysicsParams& p, double T,
                          const SimulateOptions& opt) {
  const double dt = opt.dt > 0 ? opt.dt : default_time_step(u0, p);
  if (T < dt) throw std::invalid_argument("simulate: T must be >= dt");

  TrajectoryRecord rec;
  rec.dim = u0.lattice().dim;
  rec.alpha = p.alpha;
  rec.gamma = p.gamma;
  rec.forcing_norm_sq = l2_norm_sq(p.forcing);
  if (rec.dim == 2) rec.rot_forcing_norm_sq = l2_norm_sq(curl(p.forcing));

  SpectralField u = u0;
  record_sample(rec, 0.0, u, p);
  const double guard = opt.blowup_factor *
                       std::max(rec.energy_alpha.front(), rec.forcing_norm_sq / (p.gamma * p.gamma) + 1e-30);

  const long long nsteps = std::llround(T / dt);
  for (long long step = 1; step <= nsteps; ++step) {
    const SpectralField k1 = rhs(u, p);
    const SpectralField k2 = rhs(u + (0.5 * dt) * k1, p);
    const SpectralField k3 = rhs(u + (0.5 * dt) * k2, p);
    const SpectralField k4 = rhs(u + dt * k3, p);
    u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

    const double e = alpha_norm_sq(u, p.alpha);
    if (!std::isfinite(e) || e > guard) {
      std::ostringstream msg;
      msg << "simulate: blow-up detected at t=" << step * dt << " (energy " << e
          << " exceeds guard " << guard << "); the step size dt=" << dt
          << " is too large for this state";
      throw std::runtime_error(msg.str());
    }
    if (step % opt.sample_stride == 0 || step == nsteps)
      record_sample(rec, step * dt, u, p);
  }
  rec.final_state = u;
  return rec;
}

double energy_residual(const TrajectoryRecord& rec, const PhysicsParams& p) {
  if (rec.samples() < 3) throw std::invalid_argument("energy_residual: need >= 3 samples");
  double worst = 0;
  for (std::size_t i = 1; i + 1 < rec.samples(); ++i) {
    const double h1 = rec.t[i] - rec.t[i - 1];
    const double h2 = rec.t[i + 1] - rec.t[i];
    const double dedt = (rec.energy_alpha[i + 1] - rec.energy_alpha[i - 1]) / (h1 + h2);
    const double r = 0.5 * dedt + p.gamma * rec.energy_alpha[i] - rec.forcing_work[i];
    worst = std::max(worst, std::abs(r));
  }
  return worst;
}

bool check_dissipative(const TrajectoryRecord& rec, const PhysicsParams& p) {
  const double g2 = rec.forcing_norm_sq;
  const double e0 = rec.energy_alpha.front();
  for (std::size_t i = 0; i < rec.samples(); ++i) {
    const double bound =
        (e0 * std::exp(-p.gamma * rec.t[i]) + g2 / (p.gamma * p.gamma)) * (1.0 + 1e-6) + 1e-14;
    if (rec.energy_alpha[i] > bound) return false;
  }
  return true;
}

double time_avg_gradient(const TrajectoryRecord& rec) {
  if (rec.samples() < 2) return rec.grad_norm.empty() ? 0.0 : rec.grad_norm.front();
  double integral = 0;
  for (std::size_t i = 0; i + 1 < rec.samples(); ++i)
    integral += 0.5 * (rec.grad_norm[i] + rec.grad_norm[i + 1]) * (rec.t[i + 1] - rec.t[i]);
  return integral / (rec.t.back() - rec.t.front());
}

double gradient_average_bound(const TrajectoryRecord& rec, const PhysicsParams& p) {
  const double tfin = rec.t.back() - rec.t.front();
  const double e0 = rec.energy_alpha.front();
  return std::sqrt(e0 / (2.0 * p.alpha * p.gamma * std::max(tfin, 1e-300)) +
                   rec.forcing_norm_sq / (2.0 * p.alpha * p.gamma * p.gamma));
}

bool vorticity_estimate_2d(const TrajectoryRecord& rec, const PhysicsParams& p) {
  if (rec.dim != 2 || rec.vort_energy_alpha.size() != rec.samples())
    throw std::invalid_argument("vorticity_estimate_2d: record is not 2D");
  const double rg2 = rec.rot_forcing_norm_sq;
  const double w0 = rec.vort_energy_alpha.front();
  for (std::size_t i = 0; i < rec.samples(); ++i) {
    const double bound =
        (w0 * std::exp(-p.gamma * rec.t[i]) + rg2 / (p.gamma * p.gamma)) * (1.0 + 1e-6) + 1e-14;
    if (rec.vort_energy_alpha[i] > bound) return false;
  }
  // min-form bound on the time-averaged gradient, with finite-horizon transients
  const double tfin = rec.t.back() - rec.t.front();
  if (tfin > 0) {
    const double env_vort =
        std::sqrt(w0 / (p.gamma * tfin) + rg2 / (p.gamma * p.gamma));
    const double env_energy = gradient_average_bound(rec, p);
    const double bound = std::min(env_vort, env_energy) * (1.0 + 1e-6) + 1e-14;
    if (time_avg_gradient(rec) > bound) return false;
  }
  return true;
}

void TrajectoryRecord::write_csv(std::ostream& os) const {
  const bool with_vort = dim == 2;
  os << "t,energy_alpha,grad_norm,forcing_work";
  if (with_vort) os << ",vort_energy_alpha";
  os << "\n";
  char buf[512];
  for (std::size_t i = 0; i < samples(); ++i) {
    if (with_vort)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", t[i], energy_alpha[i],
                    grad_norm[i], forcing_work[i], vort_energy_alpha[i]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", t[i], energy_alpha[i],
                    grad_norm[i], forcing_work[i]);
    os << buf;
  }
}

}  // namespace bardina
