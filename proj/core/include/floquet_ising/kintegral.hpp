#pragma once

#include <memory>
#include <span>
#include <vector>

namespace floquet_ising {

enum class Kernel { Cos, Sin };

/// Symmetry of the sampled function under k -> -k (it is always 2pi-periodic).
/// Even/Odd mirror ghost samples across 0 and pi; None extrapolates the
/// endpoints from the cubic through the four outermost samples.
enum class Parity { None, Even, Odd };

struct QuadratureOptions {
  double eps_abs = 1e-9;
  double eps_rel = 1e-7;
  int limit = 1024;
};

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  bool converged = true;
};

/// Natural cubic spline of f on [0, pi], built from samples strictly inside (0, pi)
/// (endpoint samples are accepted when parity is None).
class KInterpolant {
 public:
  KInterpolant(std::span<const double> k, std::span<const double> f, Parity parity = Parity::None);
  ~KInterpolant();
  KInterpolant(KInterpolant&&) noexcept;
  KInterpolant& operator=(KInterpolant&&) noexcept;

  double operator()(double k) const;

  /// int_0^pi f(k) kernel(n k) dk
  QuadratureResult integrate(Kernel kernel, int n, const QuadratureOptions& opts = {}) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

QuadratureResult k_integral(std::span<const double> k, std::span<const double> f, Kernel kernel, int n,
                            Parity parity = Parity::None, const QuadratureOptions& opts = {});

}  // namespace floquet_ising
