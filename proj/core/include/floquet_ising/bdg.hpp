#pragma once

#include <Eigen/Dense>

#include "floquet_ising/model.hpp"

namespace floquet_ising {

inline constexpr int kDefaultStepsPerPeriod = 4096;
inline constexpr double kNormDriftLimit = 1e-6;
inline constexpr double kUnitarityLimit = 1e-6;

/// Steps per period: starts at 4096 and doubles until a probe mode at the
/// band top passes one-period step halving at 1e-8 and loses < 1e-12 norm.
int default_steps_per_period(const DriveParams& p);

/// RK4 for i d/dt psi = H_k(t) psi on the grid t0 + i*dt, last step shortened to land on t1.
NambuAmplitude evolve_k_mode(const DriveParams& p, double k, const NambuAmplitude& state, double t0, double t1,
                             double dt);

/// Same integrator applied to both columns of a 2x2 matrix.
Eigen::Matrix2cd evolve_k_columns(const DriveParams& p, double k, const Eigen::Matrix2cd& columns, double t0,
                                  double t1, double dt);

/// First L columns (U; V) of the 2L x 2L Bogoliubov matrix; the remaining
/// columns (V*; U*) follow from particle-hole symmetry.
struct BogoliubovFrame {
  Eigen::MatrixXcd uv;
  double time = 0.0;

  int L() const { return static_cast<int>(uv.cols()); }
  Eigen::MatrixXcd U() const { return uv.topRows(L()); }
  Eigen::MatrixXcd V() const { return uv.bottomRows(L()); }
  /// Full (U, V*; V, U*).
  Eigen::MatrixXcd unitary() const;
  /// max |U^dag U - 1| over the full matrix, computed from the stored half.
  double unitarity_error() const;
};

BogoliubovFrame ground_state_bogoliubov(const ChainSpec& chain, const DriveParams& p);

/// -sum of the positive eigenvalues of H(0).
double ground_state_energy(const ChainSpec& chain, const DriveParams& p);

/// RK4 for i d/dt X = 2 H(t) X from frame.time to t1.
BogoliubovFrame evolve_real_space(const ChainSpec& chain, const DriveParams& p, const BogoliubovFrame& frame,
                                  double t1, double dt);

/// One-period map, reused for stroboscopic sampling.
class StroboscopicEvolver {
 public:
  StroboscopicEvolver(const ChainSpec& chain, const DriveParams& p, int steps_per_period);

  /// frame at time t -> frame at t + tau; frame.time must be a multiple of tau.
  BogoliubovFrame advance(const BogoliubovFrame& frame) const;
  const Eigen::MatrixXcd& propagator() const { return g_; }

 private:
  double tau_;
  Eigen::MatrixXcd g_;
};

}  // namespace floquet_ising
