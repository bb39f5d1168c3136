#pragma once

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace floquet_ising {

using cplx = std::complex<double>;

/// h(t) = h0 + A sin(omega0 t), with J = hbar = 1.
class DriveParams {
 public:
  DriveParams(double h0, double amplitude, double omega0);

  double h0() const { return h0_; }
  double amplitude() const { return amplitude_; }
  double omega0() const { return omega0_; }
  double tau() const { return tau_; }

  double field(double t) const;

 private:
  double h0_;
  double amplitude_;
  double omega0_;
  double tau_;
};

enum class Boundary { SpinPBC, OBC };

struct ChainSpec {
  int L = 0;
  Boundary boundary = Boundary::SpinPBC;

  void validate() const;
};

/// Positive ABC momenta (2n+1) pi / L, increasing.
struct KGrid {
  int L = 0;
  std::vector<double> momenta;

  std::size_t size() const { return momenta.size(); }
};

struct NambuAmplitude {
  cplx u{0.0, 0.0};
  cplx v{0.0, 0.0};

  double norm2() const { return std::norm(u) + std::norm(v); }
  Eigen::Vector2cd vec() const { return {u, v}; }
  static NambuAmplitude from(const Eigen::Vector2cd& x) { return {x(0), x(1)}; }
};

inline constexpr double kGaplessTolerance = 1e-12;

double drive_field(const DriveParams& p, double t);

KGrid build_k_grid(const ChainSpec& chain);

double static_dispersion(double h, double k);

/// Bogoliubov angle with tan theta = sin k / (h - cos k), theta in (0, pi).
double bogoliubov_angle(double h, double k);

NambuAmplitude ground_state_amplitudes(double h, double k);

/// 2x2 block [[h - cos k, -i sin k], [i sin k, -(h - cos k)]].
Eigen::Matrix2cd k_block_hamiltonian(double h, double k);

/// Nearest-neighbour bond (i, i+1) with the fermionic sign it carries.
struct Bond {
  int i;
  int j;
  double sign;
};

std::vector<Bond> chain_bonds(const ChainSpec& chain);

/// Real 2L x 2L matrix [[A, B], [-B, -A]] such that H = Psi^dagger H Psi.
Eigen::MatrixXd build_real_space_hamiltonian(const ChainSpec& chain, const DriveParams& p, double t);

}  // namespace floquet_ising
