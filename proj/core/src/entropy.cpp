#include "floquet_ising/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "floquet_ising/errors.hpp"

namespace floquet_ising {

namespace {

constexpr double kPi = std::numbers::pi;

double xlogx(double x) { return x > 0.0 ? x * std::log(x) : 0.0; }

EntropyDensity density_from_integrand(std::span<const double> k, const std::vector<double>& f,
                                      const QuadratureOptions& opts) {
  const QuadratureResult q = k_integral(k, f, Kernel::Cos, 0, Parity::Even, opts);
  if (!q.converged) warn("entropy density quadrature did not reach tolerance");
  return {q.value / kPi, q.abs_error / kPi, q.converged};
}

}  // namespace

std::vector<double> correlation_spectrum(const MajoranaCorrelation& corr) {
  const long n = corr.gamma.rows();
  if (n != corr.gamma.cols() || n % 2 != 0) throw NumericalError("correlation matrix has odd or non-square shape");
  if ((corr.gamma + corr.gamma.transpose()).cwiseAbs().maxCoeff() > 0.0) {
    throw NumericalError("correlation matrix is not antisymmetric");
  }
  const Eigen::MatrixXcd h = cplx(0.0, 1.0) * corr.gamma.cast<cplx>();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on the correlation matrix");
  const Eigen::VectorXd ev = es.eigenvalues();
  double pairing = 0.0;
  for (long i = 0; i < n; ++i) pairing = std::max(pairing, std::abs(ev(i) + ev(n - 1 - i)));
  if (pairing > kPairingLimit) {
    std::ostringstream os;
    os << "spectrum of i*Gamma is not paired (+-nu): deviation " << pairing;
    throw NumericalError(os.str());
  }
  std::vector<double> nu(n / 2);
  double overshoot = 0.0;
  for (long m = 0; m < n / 2; ++m) {
    const double x = ev(n - 1 - m);
    overshoot = std::max({overshoot, x - 1.0, -x});
    nu[m] = std::clamp(x, 0.0, 1.0);
  }
  if (overshoot > kOvershootLimit) {
    std::ostringstream os;
    os << "correlation eigenvalue outside [0, 1] by " << overshoot;
    throw NumericalError(os.str());
  }
  if (overshoot > kClampLimit) {
    std::ostringstream os;
    os << "clamped correlation eigenvalue overshoot " << overshoot;
    warn(os.str());
  }
  return nu;
}

double binary_entropy(double x) {
  if (!(std::abs(x) <= 1.0 + kClampLimit)) {
    std::ostringstream os;
    os << "binary entropy argument " << x << " outside [-1, 1]";
    throw NumericalError(os.str());
  }
  x = std::clamp(x, -1.0, 1.0);
  return -xlogx(0.5 * (1.0 + x)) - xlogx(0.5 * (1.0 - x));
}

double subchain_entropy(const MajoranaCorrelation& corr) {
  double s = 0.0;
  for (double nu : correlation_spectrum(corr)) s += binary_entropy(nu);
  return s;
}

EntropyDensity entropy_density_from_weights(std::span<const double> k, std::span<const double> weight_minus,
                                            const QuadratureOptions& opts) {
  if (k.size() != weight_minus.size()) throw ConfigError("momentum and weight counts differ");
  std::vector<double> f(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) f[i] = binary_entropy(1.0 - 2.0 * weight_minus[i]);
  return density_from_integrand(k, f, opts);
}

EntropyDensity asymptotic_entropy_density(std::span<const FloquetMode> modes, const QuadratureOptions& opts) {
  std::vector<double> k(modes.size()), w(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    k[i] = modes[i].k;
    w[i] = modes[i].weight_minus();
  }
  return entropy_density_from_weights(k, w, opts);
}

EntropyDensity gge_entropy_density(const GGEData& gge, const QuadratureOptions& opts) {
  std::vector<double> f(gge.k.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double p = gge.n_expectation[i];
    if (p < -kClampLimit || p > 1.0 + kClampLimit) throw NumericalError("GGE occupation outside [0, 1]");
    const double pc = std::clamp(p, 0.0, 1.0);
    f[i] = -xlogx(pc) - xlogx(1.0 - pc);
  }
  return density_from_integrand(gge.k, f, opts);
}

QuenchCheck quench_limit_check(double h0, double h1, const KGrid& grid, const FloquetOptions& opts, double omega0) {
  QuenchCheck out;
  out.h0 = h0;
  out.h1 = h1;
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double k = grid.momenta[i];
    const double dtheta = bogoliubov_angle(h1, k) - bogoliubov_angle(h0, k);
    const double s = std::sin(0.5 * dtheta);
    w[i] = s * s;
  }
  out.closed_form = entropy_density_from_weights(grid.momenta, w);

  const double w0 = omega0 > 0.0 ? omega0 : 4.0 * (std::abs(h1) + 1.0) + 1.0;
  FloquetOptions fo = opts;
  fo.periodic_components = false;
  const std::vector<FloquetMode> modes = analyze_grid(DriveParams(h1, 0.0, w0), grid, h0, fo);
  out.pipeline = asymptotic_entropy_density(modes);
  out.deviation = std::abs(out.closed_form.value - out.pipeline.value);
  return out;
}

}  // namespace floquet_ising
