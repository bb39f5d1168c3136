#include "floquet_ising/floquet.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "floquet_ising/bdg.hpp"
#include "floquet_ising/errors.hpp"
#include "parallel.hpp"

namespace floquet_ising {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr cplx kI(0.0, 1.0);
}  // namespace

Eigen::Matrix2cd period_propagator(const DriveParams& p, double k, double dt) {
  return evolve_k_columns(p, k, Eigen::Matrix2cd::Identity(), 0.0, p.tau(), dt);
}

Eigen::Vector2cd fix_gauge(const Eigen::Vector2cd& x) {
  const int pivot = std::abs(x(0)) >= kGaugeTolerance ? 0 : 1;
  const double a = std::abs(x(pivot));
  if (a == 0.0) return x;
  Eigen::Vector2cd y = x * (std::conj(x(pivot)) / a);
  y(pivot) = cplx(a, 0.0);
  return y;
}

Eigen::Matrix2cd FloquetDecomposition::resynthesize(double omega0) const {
  const double tau = 2.0 * kPi / omega0;
  const cplx em = std::exp(-kI * mu * tau);
  return phase * (em * phi_plus * phi_plus.adjoint() + std::conj(em) * phi_minus * phi_minus.adjoint());
}

FloquetDecomposition floquet_decompose(const Eigen::Matrix2cd& F, double omega0) {
  if (!(omega0 > 0.0)) throw ConfigError("omega0 must be > 0");
  const double tau = 2.0 * kPi / omega0;
  FloquetDecomposition out;
  out.phase = std::sqrt(F.determinant());
  const Eigen::Matrix2cd g = F / out.phase;
  // g = cos a - i sin a (n.sigma); the Hermitian part of (g - g^dag)/2i is -sin a (n.sigma)
  const double c = 0.5 * (g(0, 0) + g(1, 1)).real();
  const Eigen::Matrix2cd m = (g - g.adjoint()) / (2.0 * kI);
  const double mz = 0.5 * (m(0, 0) - m(1, 1)).real();
  const cplx w = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
  const double s = std::sqrt(mz * mz + std::norm(w));
  const double alpha = std::atan2(s, c);
  out.mu = alpha / tau;
  if (2.0 * s < kFloquetDegeneracyTolerance) {
    out.degenerate = true;
    out.phi_plus = Eigen::Vector2cd::UnitX();
    out.phi_minus = Eigen::Vector2cd::UnitY();
    return out;
  }
  // eigenvector of [[mz, w], [w*, -mz]] at -s, from the better-conditioned row
  Eigen::Vector2cd x;
  if (mz >= 0.0) {
    x << -w, mz + s;
  } else {
    x << s - mz, -std::conj(w);
  }
  x.normalize();
  out.phi_plus = fix_gauge(x);
  out.phi_minus = fix_gauge(Eigen::Vector2cd(-std::conj(x(1)), std::conj(x(0))));
  return out;
}

FloquetDecomposition label_by_reference(const FloquetDecomposition& d, const Eigen::Vector2cd& reference) {
  if (std::abs(d.phi_minus.dot(reference)) <= std::abs(d.phi_plus.dot(reference))) return d;
  FloquetDecomposition out = d;
  out.mu = -d.mu;
  out.phi_plus = d.phi_minus;
  out.phi_minus = d.phi_plus;
  return out;
}

Overlaps overlaps(const Eigen::Vector2cd& phi_plus, const Eigen::Vector2cd& phi_minus, const NambuAmplitude& psi0) {
  const Eigen::Vector2cd psi = psi0.vec();
  return {phi_plus.dot(psi), phi_minus.dot(psi)};
}

PeriodicComponents periodic_components(const DriveParams& p, double k, double mu, const Eigen::Vector2cd& phi_plus,
                                       int n_samples, double dt) {
  if (n_samples <= 0) throw ConfigError("sample count must be positive");
  const double tau = p.tau();
  PeriodicComponents out;
  out.u.resize(n_samples);
  out.v.resize(n_samples);
  NambuAmplitude state = NambuAmplitude::from(phi_plus);
  double t = 0.0;
  for (int i = 0; i < n_samples; ++i) {
    const double ti = tau * i / n_samples;
    if (i > 0) state = evolve_k_mode(p, k, state, t, ti, dt);
    t = ti;
    const cplx phase = std::exp(kI * mu * ti);
    out.u[i] = state.u * phase;
    out.v[i] = state.v * phase;
  }
  return out;
}

cplx trig_interpolate(const std::vector<cplx>& samples, double tau, double t) {
  const int n = static_cast<int>(samples.size());
  if (n == 0) throw ConfigError("no samples to interpolate");
  const double x = t / tau - std::floor(t / tau);
  const double pos = x * n;
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-12) return samples[static_cast<int>(nearest) % n];
  cplx acc = 0.0;
  const int half = n / 2;
  for (int m = -((n - 1) / 2); m <= (n - 1) / 2; ++m) {
    cplx c = 0.0;
    for (int i = 0; i < n; ++i) c += samples[i] * std::exp(cplx(0.0, -2.0 * kPi * m * i / n));
    acc += c * std::exp(cplx(0.0, 2.0 * kPi * m * x));
  }
  if (n % 2 == 0) {
    cplx c = 0.0;
    for (int i = 0; i < n; ++i) c += samples[i] * ((i % 2 == 0) ? 1.0 : -1.0);
    acc += c * std::cos(2.0 * kPi * half * x);
  }
  return acc / static_cast<double>(n);
}

NambuAmplitude FloquetMode::periodic_at(double t_bar) const {
  if (u_P.empty()) throw ConfigError("Floquet mode has no periodic components");
  return {trig_interpolate(u_P, tau, t_bar), trig_interpolate(v_P, tau, t_bar)};
}

FloquetMode analyze_mode(const DriveParams& p, double k, const NambuAmplitude& psi0, const FloquetOptions& opts) {
  const int steps = opts.steps_per_period > 0 ? opts.steps_per_period : default_steps_per_period(p);
  const double dt = p.tau() / steps;
  const FloquetDecomposition d =
      label_by_reference(floquet_decompose(period_propagator(p, k, dt), p.omega0()), psi0.vec());
  const Overlaps r = overlaps(d.phi_plus, d.phi_minus, psi0);
  FloquetMode mode;
  mode.k = k;
  mode.mu = d.mu;
  mode.tau = p.tau();
  mode.phi_plus_0 = d.phi_plus;
  mode.phi_minus_0 = d.phi_minus;
  mode.r_plus = r.r_plus;
  mode.r_minus = r.r_minus;
  mode.degenerate = d.degenerate;
  if (opts.periodic_components) {
    PeriodicComponents pc = periodic_components(p, k, d.mu, d.phi_plus, opts.n_samples, dt);
    mode.u_P = std::move(pc.u);
    mode.v_P = std::move(pc.v);
  }
  return mode;
}

std::vector<FloquetMode> analyze_grid(const DriveParams& p, const KGrid& grid, double initial_field,
                                      const FloquetOptions& opts) {
  FloquetOptions resolved = opts;
  if (resolved.steps_per_period <= 0) resolved.steps_per_period = default_steps_per_period(p);
  const long n = static_cast<long>(grid.size());
  std::vector<FloquetMode> modes(n);
  detail::parallel_for(n, [&](long i) {
    const double k = grid.momenta[i];
    modes[i] = analyze_mode(p, k, ground_state_amplitudes(initial_field, k), resolved);
  });
  return modes;
}

std::vector<FloquetMode> analyze_grid(const DriveParams& p, const KGrid& grid, const FloquetOptions& opts) {
  return analyze_grid(p, grid, p.field(0.0), opts);
}

double gge_lambda(cplx r_plus, cplx r_minus) {
  const double np = std::norm(r_plus);
  const double nm = std::norm(r_minus);
  constexpr double inf = std::numeric_limits<double>::infinity();
  if (nm < kUnderflowFloor) return -inf;
  if (np < kUnderflowFloor) return inf;
  return std::log(nm / np);
}

GGEData build_gge(const std::vector<FloquetMode>& modes) {
  GGEData out;
  for (const FloquetMode& m : modes) {
    out.k.push_back(m.k);
    out.lambda.push_back(gge_lambda(m.r_plus, m.r_minus));
    out.n_expectation.push_back(m.weight_plus());
  }
  return out;
}

}  // namespace floquet_ising
