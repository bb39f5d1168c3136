#include "floquet_ising/kintegral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numbers>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_integration.h>
#include <gsl/gsl_spline.h>

#include "floquet_ising/errors.hpp"

namespace floquet_ising {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::size_t kMinSamples = 8;
constexpr std::size_t kMaxGhosts = 16;

void quiet_gsl() {
  static std::once_flag flag;
  std::call_once(flag, [] { gsl_set_error_handler_off(); });
}

double cubic_through(const double* x, const double* y, double at) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    double w = 1.0;
    for (int j = 0; j < 4; ++j) {
      if (j != i) w *= (at - x[j]) / (x[i] - x[j]);
    }
    acc += w * y[i];
  }
  return acc;
}

struct SplineDeleter {
  void operator()(gsl_spline* s) const { gsl_spline_free(s); }
};

struct WorkspaceDeleter {
  void operator()(gsl_integration_workspace* w) const { gsl_integration_workspace_free(w); }
};

struct KernelData {
  const gsl_spline* spline;
  gsl_interp_accel* accel;
  Kernel kernel;
  int n;
};

double integrand(double k, void* params) {
  auto* d = static_cast<KernelData*>(params);
  const double f = gsl_spline_eval(d->spline, k, d->accel);
  return f * (d->kernel == Kernel::Cos ? std::cos(d->n * k) : std::sin(d->n * k));
}

}  // namespace

struct KInterpolant::Impl {
  std::unique_ptr<gsl_spline, SplineDeleter> spline;
};

KInterpolant::KInterpolant(std::span<const double> k, std::span<const double> f, Parity parity)
    : impl_(std::make_unique<Impl>()) {
  quiet_gsl();
  if (k.size() != f.size()) throw ConfigError("k and f sample counts differ");
  if (k.size() < kMinSamples) throw ConfigError("k_integral needs at least 8 samples");
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (!std::isfinite(f[i])) throw NumericalError("non-finite integrand sample");
    if (i > 0 && !(k[i] > k[i - 1])) throw ConfigError("k samples must be strictly increasing");
  }
  if (k.front() < 0.0 || k.back() > kPi) throw ConfigError("k samples must lie in [0, pi]");

  std::vector<double> x;
  std::vector<double> y;
  const std::size_t n = k.size();
  if (parity == Parity::None) {
    if (k.front() > 0.0) {
      x.push_back(0.0);
      y.push_back(cubic_through(k.data(), f.data(), 0.0));
    }
    x.insert(x.end(), k.begin(), k.end());
    y.insert(y.end(), f.begin(), f.end());
    if (k.back() < kPi) {
      y.push_back(cubic_through(k.data() + n - 4, f.data() + n - 4, kPi));
      x.push_back(kPi);
    }
  } else {
    if (k.front() <= 0.0 || k.back() >= kPi) throw ConfigError("mirrored samples must lie strictly inside (0, pi)");
    const double s = parity == Parity::Even ? 1.0 : -1.0;
    const std::size_t m = std::min(n, kMaxGhosts);
    for (std::size_t i = m; i-- > 0;) {
      x.push_back(-k[i]);
      y.push_back(s * f[i]);
    }
    x.insert(x.end(), k.begin(), k.end());
    y.insert(y.end(), f.begin(), f.end());
    for (std::size_t i = 0; i < m; ++i) {
      x.push_back(2.0 * kPi - k[n - 1 - i]);
      y.push_back(s * f[n - 1 - i]);
    }
  }
  impl_->spline.reset(gsl_spline_alloc(gsl_interp_cspline, x.size()));
  if (!impl_->spline || gsl_spline_init(impl_->spline.get(), x.data(), y.data(), x.size()) != GSL_SUCCESS) {
    throw NumericalError("cubic spline construction failed");
  }
}

KInterpolant::~KInterpolant() = default;
KInterpolant::KInterpolant(KInterpolant&&) noexcept = default;
KInterpolant& KInterpolant::operator=(KInterpolant&&) noexcept = default;

double KInterpolant::operator()(double k) const { return gsl_spline_eval(impl_->spline.get(), k, nullptr); }

QuadratureResult KInterpolant::integrate(Kernel kernel, int n, const QuadratureOptions& opts) const {
  std::unique_ptr<gsl_interp_accel, decltype(&gsl_interp_accel_free)> accel(gsl_interp_accel_alloc(),
                                                                            &gsl_interp_accel_free);
  std::unique_ptr<gsl_integration_workspace, WorkspaceDeleter> ws(gsl_integration_workspace_alloc(opts.limit));
  KernelData data{impl_->spline.get(), accel.get(), kernel, n};
  gsl_function fn;
  fn.function = &integrand;
  fn.params = &data;
  QuadratureResult r;
  const int status = gsl_integration_qag(&fn, 0.0, kPi, opts.eps_abs, opts.eps_rel, opts.limit, GSL_INTEG_GAUSS21,
                                         ws.get(), &r.value, &r.abs_error);
  r.converged = status == GSL_SUCCESS;
  return r;
}

QuadratureResult k_integral(std::span<const double> k, std::span<const double> f, Kernel kernel, int n,
                            Parity parity, const QuadratureOptions& opts) {
  return KInterpolant(k, f, parity).integrate(kernel, n, opts);
}

}  // namespace floquet_ising
