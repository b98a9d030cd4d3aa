#include "bardina/squire.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/SVD>

namespace bardina {

using std::complex;

SquireParams squire_reduce(int a, int b, double gamma) {
  if (a <= 0) throw std::invalid_argument("squire_reduce: need a > 0");
  const double a_hat = std::hypot(double(a), double(b));
  return {a_hat, gamma * a_hat / a};
}

namespace {

// (f * sin(s x3))_m and (f * cos(s x3))_m couple neighbours of the family
// m_n = s n + r: sin shifts with weights -+1/(2i), cos with 1/2.
void add_sin_coupling(const Eigen::VectorXcd& v, Eigen::VectorXcd& out, complex<double> scale) {
  const complex<double> half(0, -0.5);  // 1/(2i)
  const Eigen::Index n = v.size();
  for (Eigen::Index j = 0; j + 1 < n; ++j) out[j + 1] += scale * half * v[j];
  for (Eigen::Index j = 1; j < n; ++j) out[j - 1] -= scale * half * v[j];
}

void add_cos_coupling(const Eigen::VectorXcd& v, Eigen::VectorXcd& out, complex<double> scale) {
  const Eigen::Index n = v.size();
  for (Eigen::Index j = 0; j + 1 < n; ++j) out[j + 1] += 0.5 * scale * v[j];
  for (Eigen::Index j = 1; j < n; ++j) out[j - 1] += 0.5 * scale * v[j];
}

}  // namespace

LiftedMode squire_lift(const EigenResult& mode2d, int a, int b, const KolmogorovFlow& f, int N) {
  const SquireParams sq = squire_reduce(a, b, f.gamma);
  if (std::abs(mode2d.t_prime - sq.a_hat) > 1e-9 * std::max(1.0, sq.a_hat))
    throw std::invalid_argument("squire_lift: mode was not computed at t' = sqrt(a^2+b^2)");
  if (!(mode2d.mu.real() < 0))
    throw std::invalid_argument("squire_lift: 2D mode is not unstable");

  const int r = mode2d.r;
  const int s = f.s;
  const double a_hat = sq.a_hat;
  const double gamma_hat = sq.gamma_hat;
  const double lam_f = f.lambda / (1.0 + f.alpha * s * s);  // filtered shear amplitude

  // interpolate/truncate the 2D eigenvector onto |n| <= N
  const int N2 = int(mode2d.coefficients.size() / 2);
  Eigen::VectorXcd om = Eigen::VectorXcd::Zero(2 * N + 1);
  for (int n = -std::min(N, N2); n <= std::min(N, N2); ++n)
    om[n + N] = mode2d.coefficients[n + N2];

  LiftedMode out;
  out.a = a;
  out.b = b;
  out.r = r;
  out.s = s;

  const int fam = 2 * N + 1;
  Eigen::VectorXd m(fam), k2(fam), filt(fam);
  Eigen::VectorXi mi(fam);
  for (int n = -N; n <= N; ++n) {
    const int j = n + N;
    mi[j] = s * n + r;
    m[j] = mi[j];
    k2[j] = a_hat * a_hat + m[j] * m[j];  // = a^2 + b^2 + m^2
    filt[j] = 1.0 / (1.0 + f.alpha * k2[j]);
  }
  out.m = mi;

  // 2D velocity of the vorticity eigenvector via the stream function
  Eigen::VectorXcd psi = -om.cwiseQuotient(k2.cast<complex<double>>());
  const complex<double> I(0, 1);
  Eigen::VectorXcd w1h = -I * m.cast<complex<double>>().cwiseProduct(psi);
  Eigen::VectorXcd w3h = I * a_hat * psi;

  // eigenvalue bookkeeping: the 2D operator eigenvalue equals i a_hat c
  const complex<double> mu = mode2d.mu;
  const complex<double> c = mu / (I * a_hat);
  out.eigenvalue = complex<double>(a, 0) * I * c;  // = (a/a_hat) mu

  // 2D pressure from the momentum balance (it is a gradient for an exact mode)
  Eigen::VectorXcd r1 = (-gamma_hat + I * a_hat * c) * w1h;
  Eigen::VectorXcd r3 = (-gamma_hat + I * a_hat * c) * w3h;
  {
    Eigen::VectorXcd t1 = Eigen::VectorXcd::Zero(fam), t3 = Eigen::VectorXcd::Zero(fam);
    add_sin_coupling(w1h.cwiseProduct(filt.cast<complex<double>>()), t1, lam_f);
    add_sin_coupling(w3h.cwiseProduct(filt.cast<complex<double>>()), t3, lam_f);
    r1 -= I * a_hat * t1;
    r3 -= I * a_hat * t3;
    Eigen::VectorXcd tc = Eigen::VectorXcd::Zero(fam);
    add_cos_coupling(w3h.cwiseProduct(filt.cast<complex<double>>()), tc, lam_f * s);
    r1 -= tc;  // shear-tilting term acts on the streamwise component
  }
  Eigen::VectorXcd qh(fam);
  for (int j = 0; j < fam; ++j)
    qh[j] = -I * (a_hat * r1[j] + m[j] * r3[j]) / k2[j];

  // back to 3D variables
  const Eigen::VectorXcd q = qh * (double(a) / a_hat);

  // spanwise solve: ((-gamma + i a c) - i a u0bar * filter) w2 = i b q
  Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(fam, fam);
  for (int j = 0; j < fam; ++j) {
    A(j, j) = -f.gamma + I * double(a) * c;
    const complex<double> scale = -I * double(a) * lam_f * filt[j];
    const complex<double> half(0, -0.5);
    if (j + 1 < fam) A(j + 1, j) += scale * half;
    if (j - 1 >= 0) A(j - 1, j) -= scale * half;
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(A);
  out.condition = svd.singularValues()(0) / svd.singularValues()(fam - 1);
  if (!(out.condition < 1e12))
    throw std::runtime_error("squire_lift: spanwise operator numerically singular");
  const Eigen::VectorXcd w2 = A.partialPivLu().solve(I * double(b) * q);

  Eigen::MatrixXcd W(fam, 3);
  W.col(0) = (a_hat * w1h - double(b) * w2) / double(a);
  W.col(1) = w2;
  W.col(2) = w3h;
  out.w = W;

  // divergence of the lifted mode, exact by construction up to rounding
  double wmax = W.cwiseAbs().maxCoeff();
  double dworst = 0;
  for (int j = 0; j < fam; ++j)
    dworst = std::max(dworst,
                      std::abs(double(a) * W(j, 0) + double(b) * W(j, 1) + m[j] * W(j, 2)));
  out.divergence = dworst / std::max(wmax, 1e-300);

  // residual of the full 3D linearization on the family extended one shear
  // harmonic beyond the truncation
  const int ext = fam + 2;
  Eigen::VectorXd me(ext), k2e(ext), filte(ext);
  for (int n = -N - 1; n <= N + 1; ++n) {
    const int j = n + N + 1;
    me[j] = double(s) * n + r;
    k2e[j] = double(a) * a + double(b) * b + me[j] * me[j];
    filte[j] = 1.0 / (1.0 + f.alpha * k2e[j]);
  }
  Eigen::MatrixXcd We = Eigen::MatrixXcd::Zero(ext, 3);
  We.block(1, 0, fam, 3) = W;
  Eigen::MatrixXcd Wbar = We;
  for (int j = 0; j < ext; ++j) Wbar.row(j) *= filte[j];

  Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(ext, 3);
  for (int comp = 0; comp < 3; ++comp) {
    Eigen::VectorXcd t = Eigen::VectorXcd::Zero(ext);
    add_sin_coupling(Wbar.col(comp), t, lam_f);
    L.col(comp) += I * double(a) * t;  // u0bar d/dx1 of the filtered mode
  }
  {
    Eigen::VectorXcd t = Eigen::VectorXcd::Zero(ext);
    add_cos_coupling(Wbar.col(2), t, lam_f * s);
    L.col(0) += t;  // w3bar * d(u0bar)/dx3
  }
  L += f.gamma * We;
  for (int j = 0; j < ext; ++j) {
    Eigen::Vector3cd kv(double(a), double(b), me[j]);
    const complex<double> kdot = kv.dot(L.row(j).transpose());  // conj(k).L = k.L, k real
    L.row(j) -= (kdot / k2e[j]) * kv.transpose();
  }
  const Eigen::MatrixXcd R = L - out.eigenvalue * We;
  out.residual = R.norm() / We.norm();
  return out;
}

}  // namespace bardina
