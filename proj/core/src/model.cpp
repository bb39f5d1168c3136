#include "floquet_ising/model.hpp"

#include <cmath>
#include <iostream>
#include <numbers>
#include <string>

#include "floquet_ising/errors.hpp"

namespace floquet_ising {

namespace {
WarningSink g_sink = nullptr;
}

void set_warning_sink(WarningSink sink) { g_sink = sink; }

void warn(const std::string& message) {
  if (g_sink) {
    g_sink(message);
  } else {
    std::clog << "warning: " << message << '\n';
  }
}

DriveParams::DriveParams(double h0, double amplitude, double omega0)
    : h0_(h0), amplitude_(amplitude), omega0_(omega0), tau_(2.0 * std::numbers::pi / omega0) {
  if (!std::isfinite(h0)) throw ConfigError("h0 must be finite");
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) throw ConfigError("drive amplitude A must be >= 0");
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) throw ConfigError("omega0 must be > 0");
}

double DriveParams::field(double t) const { return h0_ + amplitude_ * std::sin(omega0_ * t); }

double drive_field(const DriveParams& p, double t) { return p.field(t); }

void ChainSpec::validate() const {
  if (L <= 0 || L % 2 != 0) throw ConfigError("chain length L must be a positive even integer, got " + std::to_string(L));
}

KGrid build_k_grid(const ChainSpec& chain) {
  chain.validate();
  if (chain.boundary != Boundary::SpinPBC) throw ConfigError("momentum grid requires a periodic chain");
  KGrid grid;
  grid.L = chain.L;
  grid.momenta.reserve(chain.L / 2);
  for (int n = 0; n < chain.L / 2; ++n) grid.momenta.push_back((2 * n + 1) * std::numbers::pi / chain.L);
  return grid;
}

double static_dispersion(double h, double k) { return std::hypot(h - std::cos(k), std::sin(k)); }

double bogoliubov_angle(double h, double k) { return std::atan2(std::sin(k), h - std::cos(k)); }

NambuAmplitude ground_state_amplitudes(double h, double k) {
  if (static_dispersion(h, k) < kGaplessTolerance) {
    throw DegenerateModeError("gapless mode at h=" + std::to_string(h) + ", k=" + std::to_string(k));
  }
  const double theta = bogoliubov_angle(h, k);
  return {cplx(0.0, std::sin(0.5 * theta)), cplx(std::cos(0.5 * theta), 0.0)};
}

Eigen::Matrix2cd k_block_hamiltonian(double h, double k) {
  const double eps = h - std::cos(k);
  const double delta = std::sin(k);
  Eigen::Matrix2cd m;
  m << cplx(eps, 0.0), cplx(0.0, -delta), cplx(0.0, delta), cplx(-eps, 0.0);
  return m;
}

std::vector<Bond> chain_bonds(const ChainSpec& chain) {
  chain.validate();
  std::vector<Bond> bonds;
  for (int j = 0; j + 1 < chain.L; ++j) bonds.push_back({j, j + 1, 1.0});
  // closing the spin ring in the even-parity sector flips the fermion hopping sign
  if (chain.boundary == Boundary::SpinPBC) bonds.push_back({chain.L - 1, 0, -1.0});
  return bonds;
}

Eigen::MatrixXd build_real_space_hamiltonian(const ChainSpec& chain, const DriveParams& p, double t) {
  const int L = chain.L;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(L, L);
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(L, L);
  a.diagonal().setConstant(0.5 * p.field(t));
  for (const Bond& bond : chain_bonds(chain)) {
    a(bond.i, bond.j) -= 0.25 * bond.sign;
    a(bond.j, bond.i) -= 0.25 * bond.sign;
    b(bond.i, bond.j) -= 0.25 * bond.sign;
    b(bond.j, bond.i) += 0.25 * bond.sign;
  }
  Eigen::MatrixXd h(2 * L, 2 * L);
  h << a, b, -b, -a;
  return h;
}

}  // namespace floquet_ising
