#pragma once

#include "bardina/field.hpp"

namespace bardina {

/// Orthogonal projection onto divergence-free fields: per mode k != 0,
/// u_hat -> u_hat - k (k.u_hat)/|k|^2.  Requires a zero-mean field.
SpectralField leray_project(const SpectralField& f);

/// Inverse elliptic smoothing u_hat -> u_hat/(1 + alpha |k|^2).
/// alpha = 0 is the identity (allowed here, nowhere else).
SpectralField helmholtz_filter(const SpectralField& f, double alpha);

/// The inverse operation, u_hat -> (1 + alpha |k|^2) u_hat.
SpectralField helmholtz_sharpen(const SpectralField& f, double alpha);

/// Fourier curl.  d=3: vector curl; d=2: scalar d1 u2 - d2 u1.
SpectralField curl(const SpectralField& f);

/// Velocity with a given 2D scalar vorticity: grad^perp of the stream function.
SpectralField velocity_from_vorticity_2d(const SpectralField& omega);

/// Dealiased pseudospectral advection (u.grad)v (no projection, no filter).
SpectralField advect(const SpectralField& u, const SpectralField& v);

/// Filtered, projected advection: the bounded quadratic term of the dynamics,
/// (1 - alpha Lap)^{-1} P (u.grad)v.  Inputs must be divergence-free,
/// zero-mean and real; lattices must match.
SpectralField bardina_nonlinearity(const SpectralField& u, const SpectralField& v, double alpha);

}  // namespace bardina
