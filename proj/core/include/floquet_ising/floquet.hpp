#pragma once

#include <vector>

#include <Eigen/Dense>

#include "floquet_ising/model.hpp"

namespace floquet_ising {

inline constexpr int kDefaultSamplesPerPeriod = 64;
inline constexpr double kFloquetDegeneracyTolerance = 1e-10;
inline constexpr double kGaugeTolerance = 1e-12;
inline constexpr double kUnderflowFloor = 1e-300;

struct FloquetOptions {
  /// 0 selects default_steps_per_period(p).
  int steps_per_period = 0;
  int n_samples = kDefaultSamplesPerPeriod;
  bool periodic_components = true;
};

/// F_k = U_k(tau, 0) from both columns of the identity.
Eigen::Matrix2cd period_propagator(const DriveParams& p, double k, double dt);

/// F = phase * (e^{-i mu tau} phi+ phi+^dag + e^{+i mu tau} phi- phi-^dag),
/// with phase = principal sqrt(det F) (1 for a traceless block).
struct FloquetDecomposition {
  double mu = 0.0;
  Eigen::Vector2cd phi_plus = Eigen::Vector2cd::UnitX();
  Eigen::Vector2cd phi_minus = Eigen::Vector2cd::UnitY();
  cplx phase{1.0, 0.0};
  bool degenerate = false;

  Eigen::Matrix2cd resynthesize(double omega0) const;
};

/// mu folded into [0, omega0/2]; phi+ carries the e^{-i mu tau} eigenvalue.
FloquetDecomposition floquet_decompose(const Eigen::Matrix2cd& F, double omega0);

/// Swaps phi+ and phi- (and flips the sign of mu) when phi- overlaps the
/// reference more than phi+. The result has mu in [-omega0/2, omega0/2].
FloquetDecomposition label_by_reference(const FloquetDecomposition& d, const Eigen::Vector2cd& reference);

/// Each vector's first component made real and >= 0 (second if the first vanishes).
Eigen::Vector2cd fix_gauge(const Eigen::Vector2cd& x);

struct Overlaps {
  cplx r_plus;
  cplx r_minus;
};

Overlaps overlaps(const Eigen::Vector2cd& phi_plus, const Eigen::Vector2cd& phi_minus, const NambuAmplitude& psi0);

struct PeriodicComponents {
  std::vector<cplx> u;
  std::vector<cplx> v;
};

/// phi+(t_i) e^{+i mu t_i} at t_i = i tau / n_samples.
PeriodicComponents periodic_components(const DriveParams& p, double k, double mu, const Eigen::Vector2cd& phi_plus,
                                       int n_samples, double dt);

/// Trigonometric interpolation of tau-periodic samples taken at i tau / N.
cplx trig_interpolate(const std::vector<cplx>& samples, double tau, double t);

struct FloquetMode {
  double k = 0.0;
  double mu = 0.0;
  double tau = 0.0;
  Eigen::Vector2cd phi_plus_0;
  Eigen::Vector2cd phi_minus_0;
  cplx r_plus;
  cplx r_minus;
  std::vector<cplx> u_P;
  std::vector<cplx> v_P;
  bool degenerate = false;

  double weight_plus() const { return std::norm(r_plus); }
  double weight_minus() const { return std::norm(r_minus); }
  /// (u_P, v_P) at intra-period offset t_bar (wrapped into [0, tau)).
  NambuAmplitude periodic_at(double t_bar) const;
};

FloquetMode analyze_mode(const DriveParams& p, double k, const NambuAmplitude& psi0, const FloquetOptions& opts);

/// Initial state: ground state of the block at h(0) = h0.
std::vector<FloquetMode> analyze_grid(const DriveParams& p, const KGrid& grid, const FloquetOptions& opts);

/// Initial state: ground state of the block at initial_field.
std::vector<FloquetMode> analyze_grid(const DriveParams& p, const KGrid& grid, double initial_field,
                                      const FloquetOptions& opts);

/// log(|r-|^2 / |r+|^2); -inf if |r-|^2 underflows, +inf if |r+|^2 does.
double gge_lambda(cplx r_plus, cplx r_minus);

struct GGEData {
  std::vector<double> k;
  std::vector<double> lambda;
  std::vector<double> n_expectation;
};

GGEData build_gge(const std::vector<FloquetMode>& modes);

}  // namespace floquet_ising
