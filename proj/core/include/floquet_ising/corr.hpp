#pragma once

#include <span>

#include <Eigen/Dense>

#include "floquet_ising/bdg.hpp"
#include "floquet_ising/floquet.hpp"
#include "floquet_ising/kintegral.hpp"

namespace floquet_ising {

inline constexpr double kOrthogonalityLimit = 1e-6;

/// Gamma_{mn} with <a_m a_n> = delta_mn + i Gamma_mn, for Majoranas
/// a_{2j} = c_j + c_j^dag and a_{2j+1} = i (c_j^dag - c_j) on sites j of the subchain.
struct MajoranaCorrelation {
  Eigen::MatrixXd gamma;
  int l = 0;
  double time_label = 0.0;
  bool asymptotic = false;
  bool quadrature_converged = true;
  double quadrature_error = 0.0;
};

/// Subchain of sites offset .. offset + l - 1 from a real-space frame.
MajoranaCorrelation correlation_generic(const BogoliubovFrame& frame, int l, int offset = 0);

struct ModeCorrelators {
  double R = 0.0;
  double I = 0.0;
  double Q = 0.0;

  double bloch_norm2() const { return 4.0 * R * R + 4.0 * I * I + Q * Q; }
};

/// R = Re(u v*), I = Im(u v*), Q = |u|^2 - |v|^2.
ModeCorrelators correlators_k(const NambuAmplitude& state);

enum class KSum {
  /// (2/L) sum over the ABC grid: exact for a finite periodic chain.
  FiniteChain,
  /// spline + adaptive quadrature of the k-integrals: thermodynamic limit.
  Quadrature,
};

struct ToeplitzOptions {
  KSum mode = KSum::Quadrature;
  QuadratureOptions quadrature{};
};

/// Block-Toeplitz Gamma from per-k correlators on the ABC grid of L = 2 * k.size().
MajoranaCorrelation toeplitz_blocks(std::span<const double> k, std::span<const ModeCorrelators> samples, int l,
                                    const ToeplitzOptions& opts = {}, double time_label = 0.0);

/// Floquet-diagonal part of the correlators at intra-period offset t_bar.
ModeCorrelators asymptotic_correlators_k(const FloquetMode& mode, double t_bar);

MajoranaCorrelation asymptotic_toeplitz(std::span<const FloquetMode> modes, int l, double t_bar,
                                        const ToeplitzOptions& opts = {});

}  // namespace floquet_ising
