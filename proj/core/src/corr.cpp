#include "floquet_ising/corr.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "floquet_ising/errors.hpp"
#include "parallel.hpp"

namespace floquet_ising {

namespace {

constexpr double kPi = std::numbers::pi;

struct FourierTable {
  std::vector<double> rs;  // sine transform of R, r = 0 .. l-1
  std::vector<double> is;  // sine transform of I
  std::vector<double> qc;  // cosine transform of Q
  bool converged = true;
  double error = 0.0;
};

void check_grid(std::span<const double> k, int l) {
  const int L = 2 * static_cast<int>(k.size());
  if (l <= 0) throw ConfigError("subchain length must be positive");
  if (l > L / 2) {
    std::ostringstream os;
    os << "subchain length " << l << " exceeds L/2 = " << L / 2 << " of the momentum grid";
    throw ConfigError(os.str());
  }
}

FourierTable finite_sums(std::span<const double> k, std::span<const ModeCorrelators> s, int l) {
  const std::size_t n = k.size();
  const double norm = 1.0 / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(k[i] - (2.0 * i + 1.0) * kPi / (2.0 * n)) > 1e-12) {
      throw ConfigError("finite-chain sums need the full ABC momentum grid");
    }
  }
  FourierTable t;
  t.rs.assign(l, 0.0);
  t.is.assign(l, 0.0);
  t.qc.assign(l, 0.0);
  for (int r = 0; r < l; ++r) {
    double a = 0.0, b = 0.0, c = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double sn = std::sin(k[i] * r);
      a += sn * s[i].R;
      b += sn * s[i].I;
      c += std::cos(k[i] * r) * s[i].Q;
    }
    t.rs[r] = a * norm;
    t.is[r] = b * norm;
    t.qc[r] = c * norm;
  }
  return t;
}

FourierTable quadratures(std::span<const double> k, std::span<const ModeCorrelators> s, int l,
                         const QuadratureOptions& opts) {
  std::vector<double> fr(k.size()), fi(k.size()), fq(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) {
    fr[i] = s[i].R;
    fi[i] = s[i].I;
    fq[i] = s[i].Q;
  }
  const KInterpolant r_spline(k, fr, Parity::Odd);
  const KInterpolant i_spline(k, fi, Parity::Odd);
  const KInterpolant q_spline(k, fq, Parity::Even);
  FourierTable t;
  t.rs.assign(l, 0.0);
  t.is.assign(l, 0.0);
  t.qc.assign(l, 0.0);
  std::vector<QuadratureResult> results(3 * static_cast<std::size_t>(l));
  detail::parallel_for(3L * l, [&](long job) {
    const int r = static_cast<int>(job / 3);
    switch (job % 3) {
      case 0:
        results[job] = r == 0 ? QuadratureResult{} : r_spline.integrate(Kernel::Sin, r, opts);
        break;
      case 1:
        results[job] = r == 0 ? QuadratureResult{} : i_spline.integrate(Kernel::Sin, r, opts);
        break;
      default:
        results[job] = q_spline.integrate(Kernel::Cos, r, opts);
    }
  });
  for (int r = 0; r < l; ++r) {
    t.rs[r] = results[3 * r].value / kPi;
    t.is[r] = results[3 * r + 1].value / kPi;
    t.qc[r] = results[3 * r + 2].value / kPi;
    for (int j = 0; j < 3; ++j) {
      t.converged = t.converged && results[3 * r + j].converged;
      t.error = std::max(t.error, results[3 * r + j].abs_error / kPi);
    }
  }
  return t;
}

MajoranaCorrelation assemble(const FourierTable& t, int l, double time_label) {
  MajoranaCorrelation c;
  c.l = l;
  c.time_label = time_label;
  c.quadrature_converged = t.converged;
  c.quadrature_error = t.error;
  c.gamma = Eigen::MatrixXd::Zero(2 * l, 2 * l);
  for (int a = 0; a < l; ++a) {
    for (int b = 0; b < l; ++b) {
      const int r = a - b;
      const double sg = r >= 0 ? 1.0 : -1.0;
      const int ar = std::abs(r);
      const double rs = sg * t.rs[ar];
      const double is = sg * t.is[ar];
      const double q = t.qc[ar];
      c.gamma(2 * a, 2 * b) = -2.0 * rs;
      c.gamma(2 * a + 1, 2 * b + 1) = 2.0 * rs;
      c.gamma(2 * a, 2 * b + 1) = -q - 2.0 * is;
      c.gamma(2 * a + 1, 2 * b) = q - 2.0 * is;
    }
  }
  c.gamma = 0.5 * (c.gamma - c.gamma.transpose()).eval();
  return c;
}

}  // namespace

MajoranaCorrelation correlation_generic(const BogoliubovFrame& frame, int l, int offset) {
  const int L = frame.L();
  if (l <= 0 || offset < 0 || offset + l > L) throw ConfigError("subchain does not fit in the chain");
  const Eigen::MatrixXcd u = frame.uv.middleRows(offset, l);
  const Eigen::MatrixXcd v = frame.uv.middleRows(L + offset, l);
  Eigen::MatrixXd even(L, 2 * l);
  Eigen::MatrixXd odd(L, 2 * l);
  for (int j = 0; j < l; ++j) {
    const Eigen::VectorXcd plus = (u.row(j) + v.row(j)).transpose();
    const Eigen::VectorXcd minus = (u.row(j) - v.row(j)).transpose();
    even.col(2 * j) = plus.real();
    even.col(2 * j + 1) = minus.imag();
    odd.col(2 * j) = -plus.imag();
    odd.col(2 * j + 1) = minus.real();
  }
  Eigen::MatrixXd gram = even.transpose() * even + odd.transpose() * odd;
  gram.diagonal().array() -= 1.0;
  const double dev = gram.cwiseAbs().maxCoeff();
  if (dev > kOrthogonalityLimit) {
    std::ostringstream os;
    os << "Majorana transformation not orthogonal (" << dev << "); frame lost unitarity";
    throw UnitarityError(os.str());
  }
  const Eigen::MatrixXd m = even.transpose() * odd;
  MajoranaCorrelation c;
  c.l = l;
  c.time_label = frame.time;
  c.gamma = m - m.transpose();
  return c;
}

ModeCorrelators correlators_k(const NambuAmplitude& state) {
  const cplx uv = state.u * std::conj(state.v);
  return {uv.real(), uv.imag(), std::norm(state.u) - std::norm(state.v)};
}

MajoranaCorrelation toeplitz_blocks(std::span<const double> k, std::span<const ModeCorrelators> samples, int l,
                                    const ToeplitzOptions& opts, double time_label) {
  if (k.size() != samples.size()) throw ConfigError("momentum and correlator counts differ");
  check_grid(k, l);
  const FourierTable t =
      opts.mode == KSum::FiniteChain ? finite_sums(k, samples, l) : quadratures(k, samples, l, opts.quadrature);
  MajoranaCorrelation c = assemble(t, l, time_label);
  if (!c.quadrature_converged) warn("Toeplitz quadrature did not reach tolerance");
  return c;
}

ModeCorrelators asymptotic_correlators_k(const FloquetMode& mode, double t_bar) {
  const NambuAmplitude p = mode.periodic_at(t_bar);
  const double a = 1.0 - 2.0 * mode.weight_minus();
  const double q = 2.0 * mode.weight_plus() - 1.0;
  const cplx uv = p.u * std::conj(p.v);
  return {a * uv.real(), a * uv.imag(), q * (std::norm(p.u) - std::norm(p.v))};
}

MajoranaCorrelation asymptotic_toeplitz(std::span<const FloquetMode> modes, int l, double t_bar,
                                        const ToeplitzOptions& opts) {
  std::vector<double> k(modes.size());
  std::vector<ModeCorrelators> s(modes.size());
  for (std::size_t i = 0; i < modes.size(); ++i) {
    k[i] = modes[i].k;
    s[i] = asymptotic_correlators_k(modes[i], t_bar);
  }
  MajoranaCorrelation c = toeplitz_blocks(k, s, l, opts, t_bar);
  c.asymptotic = true;
  return c;
}

}  // namespace floquet_ising
