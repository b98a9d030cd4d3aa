#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "bardina/config.hpp"

namespace bardina {

struct CheckResult {
  std::string name;
  bool pass = false;
  nlohmann::json info;
};

/// Individual property checks.  Both the verify subcommand and the acceptance
/// suite are built from these; the acceptance suite pins the sizes the
/// criteria state, verify picks them from the config (reduced under --quick).
namespace checks {

CheckResult lattice_anchor();
CheckResult lattice_cross_agreement(const std::vector<double>& grid, double need, double tol);
CheckResult lattice_below_pi2(int points, double lo, double hi);
CheckResult lattice_g0();
CheckResult lattice_est_lat(int points);
CheckResult spectral_properties(uint64_t seed);
CheckResult field_roundtrip(uint64_t seed);
CheckResult dynamics_steady(int M, int s, double T, double dt);
CheckResult dynamics_decay(uint64_t seed);
CheckResult dynamics_dissipative_fuzz(int runs3d, int runs2d, int M3, int M2, double T,
                                      double dt, uint64_t seed);
CheckResult dynamics_energy_residual(double dt, double T, uint64_t seed);
CheckResult eigen_oracle_agreement(int configs, uint64_t seed);
CheckResult eigen_supercritical_structure();
CheckResult eigen_streamwise_zero();
CheckResult eigen_scaling_identity(uint64_t seed);
CheckResult critical_lambda_checks(bool full);
CheckResult squire_lift_batch(int wanted);
CheckResult counting(bool include_s400);
CheckResult bounds_identities();
CheckResult bounds_consistency(const std::vector<int>& s_list, double c1);
CheckResult pointwise_fuzz(int dim, long long trials, uint64_t seed);
CheckResult collective_fuzz(const std::vector<int>& family_sizes,
                            const std::vector<double>& alphas, int dim, int M, int trials,
                            uint64_t seed);

}  // namespace checks

struct VerifyReport {
  std::vector<CheckResult> results;
  int violations = 0;
  nlohmann::json payload() const;
};

VerifyReport run_verify(const RunConfig& cfg);

}  // namespace bardina
