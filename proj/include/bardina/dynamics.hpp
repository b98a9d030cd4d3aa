#pragma once

#include <iosfwd>
#include <vector>

#include "bardina/field.hpp"

namespace bardina {

/// Parameters of the damped filtered-Euler dynamics.  The state variable is
/// the filtered velocity; the raw velocity is recovered on demand with
/// helmholtz_sharpen.
struct PhysicsParams {
  double alpha;          // square of the filter length scale, > 0
  double gamma;          // Ekman drag rate, > 0
  SpectralField forcing; // zero-mean, real

  PhysicsParams(double alpha, double gamma, SpectralField g);
};

struct TrajectoryRecord {
  int dim = 3;
  double alpha = 0, gamma = 0;
  double forcing_norm_sq = 0;       // |g|_L2^2
  double rot_forcing_norm_sq = 0;   // |curl g|_L2^2 (2D only)
  std::vector<double> t;
  std::vector<double> energy_alpha;       // |u|_alpha^2
  std::vector<double> grad_norm;          // |grad u|_L2
  std::vector<double> forcing_work;       // (g, u)
  std::vector<double> vort_energy_alpha;  // |curl u|_alpha^2, 2D only
  SpectralField final_state;

  std::size_t samples() const { return t.size(); }
  void write_csv(std::ostream& os) const;
};

/// -gamma u - (1-alpha Lap)^{-1} P (u.grad)u + (1-alpha Lap)^{-1} P g.
SpectralField rhs(const SpectralField& u, const PhysicsParams& p);

struct SimulateOptions {
  double dt = 0;              // <= 0 selects the default step below
  int sample_stride = 1;
  double blowup_factor = 1e8; // abort when energy exceeds this multiple of the start scale
};

/// Heuristic default step: min(0.05/gamma, 0.5 (1+alpha M^2)/(M U)) with U a
/// sup-norm estimate of the current state.
double default_time_step(const SpectralField& u0, const PhysicsParams& p);

/// Classical fourth-order one-step integration with fixed dt.  Samples are
/// recorded every `sample_stride` steps (and at t=0).  Throws on blow-up.
TrajectoryRecord simulate(const SpectralField& u0, const PhysicsParams& p, double T,
                          const SimulateOptions& opt = {});

/// Max over interior samples of |d/dt energy/2 + gamma energy - work| with a
/// centered-difference time derivative; second order in the sample spacing.
double energy_residual(const TrajectoryRecord& rec, const PhysicsParams& p);

/// energy(t) <= energy(0) e^{-gamma t} + |g|^2/gamma^2, up to 1e-6 slack.
bool check_dissipative(const TrajectoryRecord& rec, const PhysicsParams& p);

/// Trapezoid time average of |grad u| over the record.
double time_avg_gradient(const TrajectoryRecord& rec);

/// Finite-horizon envelope for that average,
/// sqrt(E(0)/(2 alpha gamma t) + |g|^2/(2 alpha gamma^2)); decays to the
/// asymptotic bound |g|/(gamma sqrt(2 alpha)) for long runs.
double gradient_average_bound(const TrajectoryRecord& rec, const PhysicsParams& p);

/// 2D vorticity analogue of check_dissipative, plus the min-form bound on the
/// time-averaged gradient.  Throws when called on 3D data.
bool vorticity_estimate_2d(const TrajectoryRecord& rec, const PhysicsParams& p);

}  // namespace bardina
