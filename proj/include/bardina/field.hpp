#pragma once

#include <complex>

#include <Eigen/Core>

#include "bardina/torus.hpp"

namespace bardina {

struct FieldFlags {
  bool zero_mean = false;
  bool real_valued = false;       // conjugate symmetry u_hat(-k) = conj(u_hat(k))
  bool divergence_free = false;   // k . u_hat(k) = 0
};

/// Vector (or scalar) field on a torus stored as Fourier coefficients,
/// u(x) = sum_k u_hat(k) e^{i k.x}, one column per component.
class SpectralField {
 public:
  SpectralField() = default;
  SpectralField(const TorusLattice& lattice, int components, FieldFlags flags = {})
      : lattice_(lattice),
        coeff_(Eigen::MatrixXcd::Zero(lattice.num_modes(), components)),
        flags(flags) {}

  const TorusLattice& lattice() const { return lattice_; }
  int components() const { return static_cast<int>(coeff_.cols()); }
  bool is_scalar() const { return components() == 1; }

  Eigen::MatrixXcd& data() { return coeff_; }
  const Eigen::MatrixXcd& data() const { return coeff_; }

  std::complex<double>& at(Eigen::Index mode, int comp) { return coeff_(mode, comp); }
  std::complex<double> at(Eigen::Index mode, int comp) const { return coeff_(mode, comp); }

  std::complex<double>& at(const std::array<int, 3>& k, int comp) {
    return coeff_(lattice_.index_of(k), comp);
  }
  std::complex<double> at(const std::array<int, 3>& k, int comp) const {
    return coeff_(lattice_.index_of(k), comp);
  }

  SpectralField& operator+=(const SpectralField& o) { coeff_ += o.coeff_; return *this; }
  SpectralField& operator-=(const SpectralField& o) { coeff_ -= o.coeff_; return *this; }
  SpectralField& operator*=(double c) { coeff_ *= c; return *this; }

  friend SpectralField operator+(SpectralField a, const SpectralField& b) { a += b; return a; }
  friend SpectralField operator-(SpectralField a, const SpectralField& b) { a -= b; return a; }
  friend SpectralField operator*(double c, SpectralField a) { a *= c; return a; }
  friend SpectralField operator*(SpectralField a, double c) { a *= c; return a; }

  FieldFlags flags;

 private:
  TorusLattice lattice_;
  Eigen::MatrixXcd coeff_;
};

// --- measurements; inner products carry the (2*pi)^d volume factor so that
// --- they equal the physical L^2 integrals over the box.

double l2_inner(const SpectralField& u, const SpectralField& v);
double l2_norm_sq(const SpectralField& u);
double grad_norm_sq(const SpectralField& u);
double alpha_inner(const SpectralField& u, const SpectralField& v, double alpha);
double alpha_norm_sq(const SpectralField& u, double alpha);

/// max_k |k . u_hat(k)| (solenoidality defect)
double max_divergence(const SpectralField& u);
/// |u_hat(0)|
double mean_magnitude(const SpectralField& u);
/// max_k |u_hat(-k) - conj(u_hat(k))|
double conjugate_symmetry_defect(const SpectralField& u);
/// max_k |u_hat(k)| over all components
double max_coefficient(const SpectralField& u);
/// l1 bound on sup_x |u(x)|: sum_k |u_hat(k)| per component, max over components
double sup_norm_bound(const SpectralField& u);

/// Checks the stored flags against the coefficients to the given tolerance.
bool flags_hold(const SpectralField& u, double tol = 1e-12);

}  // namespace bardina
