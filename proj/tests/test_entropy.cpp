#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "floquet_ising/bdg.hpp"
#include "floquet_ising/corr.hpp"
#include "floquet_ising/entropy.hpp"
#include "floquet_ising/errors.hpp"
#include "floquet_ising/floquet.hpp"
#include "oracles/closed_forms.hpp"

using namespace floquet_ising;
constexpr double kPi = std::numbers::pi;
const double kLog2 = std::log(2.0);

namespace {

MajoranaCorrelation blocks(int l, double scale) {
  MajoranaCorrelation c;
  c.l = l;
  c.gamma = Eigen::MatrixXd::Zero(2 * l, 2 * l);
  for (int j = 0; j < l; ++j) {
    c.gamma(2 * j, 2 * j + 1) = scale;
    c.gamma(2 * j + 1, 2 * j) = -scale;
  }
  return c;
}

// Floquet data of the reference drive on the L = 1000 grid, shared across tests.
const std::vector<FloquetMode>& reference_modes() {
  static const std::vector<FloquetMode> modes =
      analyze_grid(DriveParams(2.3, 1.0, 4.0), build_k_grid({1000, Boundary::SpinPBC}), {});
  return modes;
}

}  // namespace

TEST(BinaryEntropy, Examples) {
  EXPECT_EQ(binary_entropy(1.0), 0.0);
  EXPECT_EQ(binary_entropy(-1.0), 0.0);
  EXPECT_NEAR(binary_entropy(0.0), kLog2, 1e-15);
  EXPECT_NEAR(binary_entropy(0.5), 0.56233514461880835, 1e-15);
  for (double x : {0.1, 0.37, 0.99}) EXPECT_EQ(binary_entropy(x), binary_entropy(-x));
  EXPECT_NO_THROW(binary_entropy(1.0 + 1e-10));
  EXPECT_THROW(binary_entropy(1.0 + 1e-8), NumericalError);
}

TEST(CorrelationSpectrum, Examples) {
  for (double nu : correlation_spectrum(blocks(5, 1.0))) EXPECT_NEAR(nu, 1.0, 1e-15);
  for (double nu : correlation_spectrum(blocks(5, 0.0))) EXPECT_EQ(nu, 0.0);
  static int warnings = 0;
  set_warning_sink([](const std::string&) { ++warnings; });
  EXPECT_EQ(correlation_spectrum(blocks(3, 1.0 + 1e-10))[0], 1.0);
  EXPECT_EQ(warnings, 0);
  EXPECT_EQ(correlation_spectrum(blocks(3, 1.0 + 1e-7))[0], 1.0);
  EXPECT_EQ(warnings, 1);
  set_warning_sink(nullptr);
  EXPECT_THROW(correlation_spectrum(blocks(3, 1.0 + 1e-5)), NumericalError);
  MajoranaCorrelation bad = blocks(3, 0.5);
  bad.gamma(0, 3) = 0.1;
  EXPECT_THROW(correlation_spectrum(bad), NumericalError);
}

TEST(CorrelationSpectrum, RandomAgainstRealEigensolver) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int trial = 0; trial < 10; ++trial) {
    const int l = 3 + trial;
    Eigen::MatrixXd a(2 * l, 2 * l);
    for (int i = 0; i < 2 * l; ++i)
      for (int j = 0; j < 2 * l; ++j) a(i, j) = n(rng);
    MajoranaCorrelation c;
    c.l = l;
    c.gamma = a - a.transpose();
    const double top = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(c.gamma.transpose() * c.gamma).eigenvalues().maxCoeff();
    c.gamma /= std::sqrt(top) * 1.01;
    const Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(c.gamma).eigenvalues();
    std::vector<double> ref;
    for (long i = 0; i < ev.size(); ++i)
      if (ev(i).imag() > 0) ref.push_back(ev(i).imag());
    std::sort(ref.rbegin(), ref.rend());
    const auto nu = correlation_spectrum(c);
    ASSERT_EQ(ref.size(), nu.size());
    for (std::size_t m = 0; m < nu.size(); ++m) EXPECT_NEAR(nu[m], ref[m], 1e-12);
  }
}

TEST(SubchainEntropy, Examples) {
  EXPECT_NEAR(subchain_entropy(blocks(10, 1.0)), 0.0, 1e-12);
  EXPECT_NEAR(subchain_entropy(blocks(10, 0.0)), 10 * kLog2, 1e-12);
  const ChainSpec chain{40, Boundary::SpinPBC};
  const BogoliubovFrame v = ground_state_bogoliubov(chain, DriveParams(1e6, 0.0, 1.0));
  EXPECT_NEAR(subchain_entropy(correlation_generic(v, 12)), 0.0, 1e-9);
}

TEST(SubchainEntropy, GroundStateAreaLaw) {
  const ChainSpec chain{400, Boundary::SpinPBC};
  const BogoliubovFrame f = ground_state_bogoliubov(chain, DriveParams(2.3, 1.0, 4.0));
  std::vector<double> s;
  for (int l : {10, 12, 16, 20}) s.push_back(subchain_entropy(correlation_generic(f, l)));
  EXPECT_GT(s[0], 0.0);
  EXPECT_LT(s[0], kLog2);
  for (double x : s) EXPECT_NEAR(x, s.back(), 1e-6);
}

TEST(SubchainEntropy, PureGlobalState) {
  const ChainSpec chain{32, Boundary::SpinPBC};
  const DriveParams p(2.3, 1.0, 4.0);
  const BogoliubovFrame f0 = ground_state_bogoliubov(chain, p);
  EXPECT_NEAR(subchain_entropy(correlation_generic(f0, 32)), 0.0, 1e-7);
  const BogoliubovFrame f1 = evolve_real_space(chain, p, f0, 3 * p.tau(), p.tau() / 4096);
  EXPECT_NEAR(subchain_entropy(correlation_generic(f1, 32)), 0.0, 1e-7);
}

TEST(EntropyDensity, Examples) {
  const KGrid g = build_k_grid({200, Boundary::SpinPBC});
  const std::vector<double> zero(g.momenta.size(), 0.0), half(g.momenta.size(), 0.5);
  EXPECT_NEAR(entropy_density_from_weights(g.momenta, zero).value, 0.0, 1e-12);
  EXPECT_NEAR(entropy_density_from_weights(g.momenta, half).value, kLog2, 1e-10);
  GGEData gge;
  gge.k = g.momenta;
  gge.n_expectation.assign(g.momenta.size(), 1.0);
  EXPECT_NEAR(gge_entropy_density(gge).value, 0.0, 1e-12);
  gge.n_expectation.assign(g.momenta.size(), 0.5);
  EXPECT_NEAR(gge_entropy_density(gge).value, kLog2, 1e-10);

  const auto undriven = analyze_grid(DriveParams(2.3, 0.0, 4.0), g, {.periodic_components = false});
  EXPECT_NEAR(asymptotic_entropy_density(undriven).value, 0.0, 1e-9);
}

TEST(EntropyDensity, ReferenceDriveAndGGEIdentity) {
  const auto& modes = reference_modes();
  const EntropyDensity s = asymptotic_entropy_density(modes);
  EXPECT_TRUE(s.converged);
  EXPECT_GT(s.value, 0.0);
  EXPECT_LT(s.value, kLog2);
  EXPECT_NEAR(gge_entropy_density(build_gge(modes)).value, s.value, 1e-8);
}

TEST(EntropyDensity, GridRefinement) {
  const DriveParams p(2.3, 1.0, 4.0);
  const double a = asymptotic_entropy_density(reference_modes()).value;
  const double b =
      asymptotic_entropy_density(analyze_grid(p, build_k_grid({2000, Boundary::SpinPBC}), {.periodic_components = false})).value;
  EXPECT_NEAR(a, b, 1e-4);
}

TEST(VolumeLaw, SlopeMatchesDensity) {
  const auto& modes = reference_modes();
  const double s = asymptotic_entropy_density(modes).value;
  std::vector<double> ls, ss;
  for (int l = 40; l <= 160; l += 20) {
    ls.push_back(l);
    ss.push_back(subchain_entropy(asymptotic_toeplitz(modes, l, 0.0)));
  }
  const double n = static_cast<double>(ls.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) mx += ls[i] / n, my += ss[i] / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < ls.size(); ++i) sxy += (ls[i] - mx) * (ss[i] - my), sxx += (ls[i] - mx) * (ls[i] - mx);
  EXPECT_NEAR(sxy / sxx / s, 1.0, 0.02);
}

TEST(VolumeLaw, RescaledDifferenceShrinks) {
  const auto& modes = reference_modes();
  const double s = asymptotic_entropy_density(modes).value;
  double prev = 1e9;
  for (int l : {20, 40, 80, 160}) {
    const double d = std::abs(subchain_entropy(asymptotic_toeplitz(modes, l, 0.0)) / l - s);
    EXPECT_LT(d, prev) << l;
    prev = d;
  }
}

TEST(VolumeLaw, SpectrumClustersOnModeAmplitudes) {
  const auto& modes = reference_modes();
  const auto nu = correlation_spectrum(asymptotic_toeplitz(modes, 160, 0.0));
  constexpr int bins = 20;
  std::vector<double> hn(bins, 0.0), ha(bins, 0.0);
  auto bin = [](double x) { return std::min(bins - 1, static_cast<int>(std::abs(x) * bins)); };
  for (double x : nu) hn[bin(x)] += 1.0 / nu.size();
  for (const FloquetMode& m : modes) ha[bin(1.0 - 2.0 * m.weight_minus())] += 1.0 / modes.size();
  double sup = 0;
  for (int b = 0; b < bins; ++b) sup = std::max(sup, std::abs(hn[b] - ha[b]));
  EXPECT_LT(sup, 0.1);
}

TEST(VolumeLaw, IntraPeriodSpreadIsSubleading) {
  const auto& modes = reference_modes();
  const double tau = modes.front().tau;
  double prev = 1e9;
  for (int l : {20, 40, 80}) {
    double lo = 1e9, hi = -1e9, mean = 0;
    for (int i = 0; i < 8; ++i) {
      const double s = subchain_entropy(asymptotic_toeplitz(modes, l, i * tau / 8));
      lo = std::min(lo, s), hi = std::max(hi, s), mean += s / 8;
    }
    const double ratio = (hi - lo) / mean;
    EXPECT_LT(ratio, prev) << l;
    prev = ratio;
  }
}

TEST(QuenchCheck, NoQuench) {
  const QuenchCheck q = quench_limit_check(2.3, 2.3, build_k_grid({200, Boundary::SpinPBC}));
  EXPECT_NEAR(q.closed_form.value, 0.0, 1e-12);
  EXPECT_NEAR(q.pipeline.value, 0.0, 1e-9);
}

TEST(QuenchCheck, ClosedFormAgainstPipelineAndHighPrecision) {
  const KGrid g = build_k_grid({1000, Boundary::SpinPBC});
  struct Case {
    double h0, h1, exact;
  };
  for (const Case c : {Case{2.3, 1.5, 0.04956073617050809}, Case{0.5, 1.5, 0.27106747662616231},
                       Case{2.3, 0.5, 0.31214746270440944}}) {
    const QuenchCheck q = quench_limit_check(c.h0, c.h1, g);
    EXPECT_LT(q.deviation, 1e-7) << c.h0 << " " << c.h1;
    EXPECT_NEAR(q.closed_form.value, c.exact, 1e-6) << c.h0 << " " << c.h1;
  }
}

TEST(QuenchCheck, ExtremeQuench) {
  // h0 -> infinity, h1 = 0: |r-|^2 = cos^2(k/2), s = 2 log 2 - 1
  const QuenchCheck q = quench_limit_check(1e6, 0.0, build_k_grid({1000, Boundary::SpinPBC}));
  EXPECT_NEAR(q.pipeline.value, 2 * kLog2 - 1, 1e-6);
  EXPECT_NEAR(q.closed_form.value, 2 * kLog2 - 1, 1e-6);
}
