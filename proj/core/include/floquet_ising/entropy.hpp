#pragma once

#include <span>
#include <vector>

#include "floquet_ising/corr.hpp"
#include "floquet_ising/floquet.hpp"
#include "floquet_ising/kintegral.hpp"

namespace floquet_ising {

inline constexpr double kPairingLimit = 1e-8;
inline constexpr double kClampLimit = 1e-9;
/// Overshoots between kClampLimit and this are clamped with a warning.
inline constexpr double kOvershootLimit = 1e-6;

struct EntropyTrace {
  int l = 0;
  std::vector<double> times;
  std::vector<double> values;
};

/// The l non-negative eigenvalues nu_m of i*Gamma, descending, clamped into [0, 1].
/// Quadrature-built matrices overshoot 1 by the quadrature error, hence the two limits.
std::vector<double> correlation_spectrum(const MajoranaCorrelation& corr);

/// H(x) = -(1+x)/2 log((1+x)/2) - (1-x)/2 log((1-x)/2), natural log, H(+-1) = 0.
double binary_entropy(double x);

/// sum_m H(nu_m)
double subchain_entropy(const MajoranaCorrelation& corr);

struct EntropyDensity {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = true;
};

/// (1/pi) int_0^pi H(1 - 2 w(k)) dk from samples of w = |r-|^2.
EntropyDensity entropy_density_from_weights(std::span<const double> k, std::span<const double> weight_minus,
                                            const QuadratureOptions& opts = {});

EntropyDensity asymptotic_entropy_density(std::span<const FloquetMode> modes, const QuadratureOptions& opts = {});

/// -(1/pi) int_0^pi [p log p + (1-p) log(1-p)] dk with p = n_expectation.
EntropyDensity gge_entropy_density(const GGEData& gge, const QuadratureOptions& opts = {});

struct QuenchCheck {
  double h0 = 0.0;
  double h1 = 0.0;
  EntropyDensity closed_form;
  EntropyDensity pipeline;
  double deviation = 0.0;
};

/// omega0 <= 0 picks 4(|h1| + 1) + 1, which keeps every folded quasi-energy away from degeneracy.
QuenchCheck quench_limit_check(double h0, double h1, const KGrid& grid, const FloquetOptions& opts = {},
                               double omega0 = 0.0);

}  // namespace floquet_ising
