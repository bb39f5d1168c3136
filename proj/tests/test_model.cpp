#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "floquet_ising/errors.hpp"
#include "floquet_ising/model.hpp"

using namespace floquet_ising;
constexpr double kPi = std::numbers::pi;

TEST(DriveParams, FieldAndPeriod) {
  const DriveParams p(2.3, 1.0, 4.0);
  EXPECT_DOUBLE_EQ(drive_field(p, 0.0), 2.3);
  EXPECT_NEAR(drive_field(p, kPi / 8), 3.3, 1e-15);
  EXPECT_NEAR(p.tau() * p.omega0(), 2 * kPi, 1e-15);
  for (double t : {0.1, 0.77, 3.0}) EXPECT_NEAR(drive_field(p, t + p.tau()), drive_field(p, t), 1e-14);
  const DriveParams s(2.3, 0.0, 0.35);
  for (double t : {0.0, 1.3, 17.0}) EXPECT_EQ(drive_field(s, t), 2.3);
}

TEST(DriveParams, RejectsBadValues) {
  EXPECT_THROW(DriveParams(1.0, -0.1, 1.0), ConfigError);
  EXPECT_THROW(DriveParams(1.0, 0.5, 0.0), ConfigError);
  EXPECT_THROW(DriveParams(1.0, 0.5, -2.0), ConfigError);
}

TEST(KGrid, Momenta) {
  auto g = build_k_grid({4, Boundary::SpinPBC});
  ASSERT_EQ(g.size(), 2u);
  EXPECT_DOUBLE_EQ(g.momenta[0], kPi / 4);
  EXPECT_DOUBLE_EQ(g.momenta[1], 3 * kPi / 4);
  g = build_k_grid({8, Boundary::SpinPBC});
  ASSERT_EQ(g.size(), 4u);
  for (int n = 0; n < 4; ++n) EXPECT_DOUBLE_EQ(g.momenta[n], (2 * n + 1) * kPi / 8);
  g = build_k_grid({2, Boundary::SpinPBC});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_DOUBLE_EQ(g.momenta[0], kPi / 2);
  for (int L : {2, 6, 100, 1000}) {
    g = build_k_grid({L, Boundary::SpinPBC});
    EXPECT_EQ(static_cast<int>(g.size()), L / 2);
    EXPECT_TRUE(std::is_sorted(g.momenta.begin(), g.momenta.end()));
    EXPECT_GT(g.momenta.front(), 0.0);
    EXPECT_LT(g.momenta.back(), kPi);
  }
}

TEST(KGrid, RejectsOddAndOpen) {
  EXPECT_THROW(build_k_grid({7, Boundary::SpinPBC}), ConfigError);
  EXPECT_THROW(build_k_grid({8, Boundary::OBC}), ConfigError);
  EXPECT_THROW(build_k_grid({0, Boundary::SpinPBC}), ConfigError);
}

TEST(Dispersion, Values) {
  EXPECT_NEAR(static_dispersion(1.0, 0.0), 0.0, 1e-15);
  EXPECT_NEAR(static_dispersion(2.3, kPi / 2), 2.5079872407968905, 1e-14);
  EXPECT_NEAR(static_dispersion(0.0, kPi), 1.0, 1e-15);
}

TEST(GroundState, Amplitudes) {
  const NambuAmplitude a = ground_state_amplitudes(1.0, kPi / 2);
  EXPECT_NEAR(a.u.real(), 0.0, 1e-16);
  EXPECT_NEAR(a.u.imag(), std::sin(kPi / 8), 1e-15);
  EXPECT_NEAR(a.v.real(), std::cos(kPi / 8), 1e-15);
  for (double k : {0.1, 1.0, 3.0}) {
    const NambuAmplitude b = ground_state_amplitudes(1e6, k);
    EXPECT_NEAR(std::abs(b.u), 0.0, 1e-6);
    EXPECT_NEAR(std::abs(b.v - 1.0), 0.0, 1e-12);
  }
}

TEST(GroundState, IsNegativeEnergyEigenvector) {
  const double h = 2.3, k = kPi / 2;
  const Eigen::Matrix2cd hk = k_block_hamiltonian(h, k);
  const Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(hk);
  EXPECT_NEAR(es.eigenvalues()(0), -static_dispersion(h, k), 1e-14);
  const Eigen::Vector2cd x = ground_state_amplitudes(h, k).vec();
  EXPECT_LT((hk * x + static_dispersion(h, k) * x).norm(), 1e-14);
  EXPECT_NEAR(std::abs(es.eigenvectors().col(0).dot(x)), 1.0, 1e-14);
}

TEST(GroundState, NormalizedEverywhere) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> hd(-4, 4), kd(0.01, kPi - 0.01);
  for (int i = 0; i < 200; ++i) {
    const NambuAmplitude a = ground_state_amplitudes(hd(rng), kd(rng));
    EXPECT_NEAR(a.norm2(), 1.0, 1e-14);
  }
}

TEST(GroundState, GaplessModeRejected) {
  EXPECT_THROW(ground_state_amplitudes(1.0, 0.0), DegenerateModeError);
}

TEST(RealSpace, SpectrumMatchesDispersion) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> hd(-3, 3), ad(0, 2), wd(0.3, 6), td(0, 10);
  for (int L : {2, 4, 8, 16}) {
    for (int trial = 0; trial < 5; ++trial) {
      const DriveParams p(hd(rng), ad(rng), wd(rng));
      const double t = td(rng);
      const ChainSpec chain{L, Boundary::SpinPBC};
      const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(2.0 * build_real_space_hamiltonian(chain, p, t),
                                                              Eigen::EigenvaluesOnly);
      std::vector<double> expect;
      for (double k : build_k_grid(chain).momenta) {
        const double E = static_dispersion(p.field(t), k);
        expect.insert(expect.end(), {E, E, -E, -E});
      }
      std::sort(expect.begin(), expect.end());
      for (int i = 0; i < 2 * L; ++i) EXPECT_NEAR(es.eigenvalues()(i), expect[i], 1e-10);
    }
  }
}

TEST(RealSpace, StaticSpectrumL4) {
  const ChainSpec chain{4, Boundary::SpinPBC};
  const DriveParams p(2.3, 0.0, 1.0);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_real_space_hamiltonian(chain, p, 0.0));
  const double e1 = static_dispersion(2.3, kPi / 4), e3 = static_dispersion(2.3, 3 * kPi / 4);
  const std::vector<double> expect{-e3, -e3, -e1, -e1, e1, e1, e3, e3};
  for (int i = 0; i < 8; ++i) EXPECT_NEAR(2.0 * es.eigenvalues()(i), expect[i], 1e-12);
}

TEST(RealSpace, BlockSymmetries) {
  for (auto b : {Boundary::SpinPBC, Boundary::OBC}) {
    const ChainSpec chain{6, b};
    const Eigen::MatrixXd h = build_real_space_hamiltonian(chain, DriveParams(1.7, 0.4, 2.0), 0.3);
    const Eigen::MatrixXd A = h.topLeftCorner(6, 6), B = h.topRightCorner(6, 6);
    EXPECT_EQ(A, A.transpose());
    EXPECT_EQ(B, -B.transpose());
    EXPECT_EQ(Eigen::MatrixXd(h.bottomLeftCorner(6, 6)), Eigen::MatrixXd(-B));
    EXPECT_EQ(Eigen::MatrixXd(h.bottomRightCorner(6, 6)), Eigen::MatrixXd(-A));
    // particle-hole partner of an eigenvector
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    for (int i = 0; i < 12; ++i) {
      Eigen::VectorXd x = es.eigenvectors().col(i);
      Eigen::VectorXd px(12);
      px << x.tail(6), x.head(6);
      EXPECT_LT((h * px + es.eigenvalues()(i) * px).norm(), 1e-12);
    }
  }
}

TEST(RealSpace, OpenChainL2ByHand) {
  const Eigen::MatrixXd h = build_real_space_hamiltonian({2, Boundary::OBC}, DriveParams(0.8, 0.0, 1.0), 0.0);
  Eigen::MatrixXd expect(4, 4);
  expect << 0.4, -0.25, 0.0, -0.25,
            -0.25, 0.4, 0.25, 0.0,
            0.0, 0.25, -0.4, 0.25,
            -0.25, 0.0, 0.25, -0.4;
  EXPECT_EQ(h, expect);
}
