#include "floquet_ising/bdg.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "floquet_ising/errors.hpp"

namespace floquet_ising {

namespace {

constexpr cplx kI(0.0, 1.0);

struct StepGrid {
  double t0;
  double t1;
  double dt;
  long n;

  double start(long i) const { return t0 + static_cast<double>(i) * dt; }
  double length(long i) const { return i + 1 < n ? dt : t1 - start(i); }
};

StepGrid make_grid(double t0, double t1, double dt) {
  if (!(dt > 0.0)) throw ConfigError("integration step must be > 0");
  if (t1 < t0) throw ConfigError("evolution must run forward in time");
  const double span = t1 - t0;
  long n = 0;
  if (span > 0.0) n = std::max(1L, static_cast<long>(std::ceil(span / dt - 1e-9)));
  return {t0, t1, dt, n};
}

// -i H_k y for the 2x2 block, row-wise so it works on vectors and matrices
template <class State>
State k_rhs(double eps, double sk, const State& y) {
  State r;
  r.row(0) = -kI * eps * y.row(0) - sk * y.row(1);
  r.row(1) = sk * y.row(0) + kI * eps * y.row(1);
  return r;
}

template <class State>
State rk4_k(const DriveParams& p, double k, State y, const StepGrid& g) {
  const double ck = std::cos(k);
  const double sk = std::sin(k);
  for (long i = 0; i < g.n; ++i) {
    const double t = g.start(i);
    const double h = g.length(i);
    const double ea = p.field(t) - ck;
    const double em = p.field(t + 0.5 * h) - ck;
    const double eb = p.field(t + h) - ck;
    const State k1 = k_rhs(ea, sk, y);
    const State k2 = k_rhs(em, sk, State(y + 0.5 * h * k1));
    const State k3 = k_rhs(em, sk, State(y + 0.5 * h * k2));
    const State k4 = k_rhs(eb, sk, State(y + h * k3));
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

void check_norm(double before, double after, double k) {
  if (std::abs(after - before) > kNormDriftLimit * std::max(before, 1e-300)) {
    std::ostringstream os;
    os << "norm drift " << std::abs(after - before) << " at k=" << k << "; integration step too coarse";
    throw NormDriftError(os.str());
  }
}

// out = -i 2H(h) x, x and out hold 2L entries (particle block then hole block)
void real_rhs(double h, const std::vector<Bond>& bonds, int L, const cplx* x, cplx* out) {
  const cplx* xt = x;
  const cplx* xb = x + L;
  cplx* ot = out;
  cplx* ob = out + L;
  for (int i = 0; i < L; ++i) {
    ot[i] = h * xt[i];
    ob[i] = -h * xb[i];
  }
  for (const Bond& b : bonds) {
    const double s = 0.5 * b.sign;
    ot[b.i] -= s * (xt[b.j] + xb[b.j]);
    ot[b.j] += s * (xb[b.i] - xt[b.i]);
    ob[b.i] += s * (xt[b.j] + xb[b.j]);
    ob[b.j] += s * (xb[b.i] - xt[b.i]);
  }
  for (int i = 0; i < 2 * L; ++i) out[i] = cplx(out[i].imag(), -out[i].real());
}

Eigen::MatrixXcd evolve_columns(const ChainSpec& chain, const DriveParams& p, const Eigen::MatrixXcd& x0,
                                const StepGrid& g) {
  const int L = chain.L;
  const int n2 = 2 * L;
  const auto bonds = chain_bonds(chain);
  std::vector<double> fa(g.n), fm(g.n), fb(g.n), len(g.n);
  for (long i = 0; i < g.n; ++i) {
    const double t = g.start(i);
    len[i] = g.length(i);
    fa[i] = p.field(t);
    fm[i] = p.field(t + 0.5 * len[i]);
    fb[i] = p.field(t + len[i]);
  }
  Eigen::MatrixXcd x = x0;
  const long cols = x.cols();
#pragma omp parallel for schedule(static)
  for (long c = 0; c < cols; ++c) {
    std::vector<cplx> k1(n2), k2(n2), k3(n2), k4(n2), tmp(n2);
    cplx* y = x.col(c).data();
    for (long i = 0; i < g.n; ++i) {
      const double h = len[i];
      real_rhs(fa[i], bonds, L, y, k1.data());
      for (int j = 0; j < n2; ++j) tmp[j] = y[j] + 0.5 * h * k1[j];
      real_rhs(fm[i], bonds, L, tmp.data(), k2.data());
      for (int j = 0; j < n2; ++j) tmp[j] = y[j] + 0.5 * h * k2[j];
      real_rhs(fm[i], bonds, L, tmp.data(), k3.data());
      for (int j = 0; j < n2; ++j) tmp[j] = y[j] + h * k3[j];
      real_rhs(fb[i], bonds, L, tmp.data(), k4.data());
      for (int j = 0; j < n2; ++j) y[j] += (h / 6.0) * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    }
  }
  return x;
}

void check_frame(const BogoliubovFrame& frame) {
  const double err = frame.unitarity_error();
  if (err > kUnitarityLimit) {
    std::ostringstream os;
    os << "Bogoliubov frame lost unitarity (" << err << ") at t=" << frame.time;
    throw UnitarityError(os.str());
  }
}

}  // namespace

int default_steps_per_period(const DriveParams& p) {
  const double tau = p.tau();
  const double h_top = std::abs(p.h0() + p.amplitude()) >= std::abs(p.h0() - p.amplitude()) ? p.h0() + p.amplitude()
                                                                                          : p.h0() - p.amplitude();
  const double k = h_top >= 0.0 ? std::numbers::pi : 0.0;
  const Eigen::Vector2cd psi(std::sqrt(0.5), cplx(0.0, std::sqrt(0.5)));
  constexpr int kMaxSteps = 1 << 22;
  int n = kDefaultStepsPerPeriod;
  Eigen::Vector2cd coarse = rk4_k(p, k, psi, make_grid(0.0, tau, tau / n));
  while (n < kMaxSteps) {
    const Eigen::Vector2cd fine = rk4_k(p, k, psi, make_grid(0.0, tau, tau / (2 * n)));
    const double drift = std::abs(coarse.squaredNorm() - 1.0);
    if ((coarse - fine).norm() < 1e-8 && drift < 1e-12) return n;
    coarse = fine;
    n *= 2;
  }
  return n;
}

NambuAmplitude evolve_k_mode(const DriveParams& p, double k, const NambuAmplitude& state, double t0, double t1,
                             double dt) {
  const Eigen::Vector2cd y = rk4_k(p, k, state.vec(), make_grid(t0, t1, dt));
  check_norm(state.norm2(), y.squaredNorm(), k);
  return NambuAmplitude::from(y);
}

Eigen::Matrix2cd evolve_k_columns(const DriveParams& p, double k, const Eigen::Matrix2cd& columns, double t0,
                                  double t1, double dt) {
  const Eigen::Matrix2cd y = rk4_k(p, k, columns, make_grid(t0, t1, dt));
  for (int c = 0; c < 2; ++c) check_norm(columns.col(c).squaredNorm(), y.col(c).squaredNorm(), k);
  return y;
}

Eigen::MatrixXcd BogoliubovFrame::unitary() const {
  const int n = L();
  Eigen::MatrixXcd full(2 * n, 2 * n);
  full.leftCols(n) = uv;
  full.topRightCorner(n, n) = V().conjugate();
  full.bottomRightCorner(n, n) = U().conjugate();
  return full;
}

double BogoliubovFrame::unitarity_error() const {
  const Eigen::MatrixXcd u = U();
  const Eigen::MatrixXcd v = V();
  Eigen::MatrixXcd gram = uv.adjoint() * uv;
  gram.diagonal().array() -= 1.0;
  const Eigen::MatrixXcd cross = u.transpose() * v + v.transpose() * u;
  return std::max(gram.cwiseAbs().maxCoeff(), cross.cwiseAbs().maxCoeff());
}

BogoliubovFrame ground_state_bogoliubov(const ChainSpec& chain, const DriveParams& p) {
  chain.validate();
  const int L = chain.L;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_real_space_hamiltonian(chain, p, 0.0));
  if (es.info() != Eigen::Success) throw NumericalError("eigensolver failed on the initial Hamiltonian");
  if (es.eigenvalues().cwiseAbs().minCoeff() < kGaplessTolerance) {
    warn("initial Hamiltonian has a zero mode; ground state is degenerate");
  }
  BogoliubovFrame frame;
  frame.uv = es.eigenvectors().rightCols(L).cast<cplx>();
  frame.time = 0.0;
  return frame;
}

double ground_state_energy(const ChainSpec& chain, const DriveParams& p) {
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(build_real_space_hamiltonian(chain, p, 0.0),
                                                          Eigen::EigenvaluesOnly);
  return -es.eigenvalues().tail(chain.L).sum();
}

BogoliubovFrame evolve_real_space(const ChainSpec& chain, const DriveParams& p, const BogoliubovFrame& frame,
                                  double t1, double dt) {
  chain.validate();
  if (frame.uv.rows() != 2 * chain.L || frame.uv.cols() != chain.L) throw ConfigError("frame does not match chain");
  BogoliubovFrame out;
  out.uv = evolve_columns(chain, p, frame.uv, make_grid(frame.time, t1, dt));
  out.time = t1;
  check_frame(out);
  return out;
}

StroboscopicEvolver::StroboscopicEvolver(const ChainSpec& chain, const DriveParams& p, int steps_per_period)
    : tau_(p.tau()) {
  chain.validate();
  if (steps_per_period <= 0) throw ConfigError("steps per period must be positive");
  const int L = chain.L;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(2 * L, L);
  const Eigen::MatrixXcd g1 = evolve_columns(chain, p, id, make_grid(0.0, tau_, tau_ / steps_per_period));
  g_.resize(2 * L, 2 * L);
  g_.leftCols(L) = g1;
  g_.topRightCorner(L, L) = g1.bottomRows(L).conjugate();
  g_.bottomRightCorner(L, L) = g1.topRows(L).conjugate();
}

BogoliubovFrame StroboscopicEvolver::advance(const BogoliubovFrame& frame) const {
  BogoliubovFrame out;
  out.uv.noalias() = g_ * frame.uv;
  out.time = frame.time + tau_;
  return out;
}

}  // namespace floquet_ising
