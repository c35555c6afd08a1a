#pragma once

// Closed-form kernels of the sine-switched detector problem, written so that
// every removable singularity is evaluated without cancellation. All kernels
// are templates on the scalar so that Jet arguments yield exact derivatives.

#include "udw/jet.hpp"

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <numbers>

namespace udw {

using cd = std::complex<double>;
inline constexpr double pi = std::numbers::pi;
inline constexpr cd I_unit{0.0, 1.0};

// sin(x)/x, with a short even series near the origin.
template <class S>
S sinc(const S& x) {
  using std::sin;
  if (std::abs(real_value(x)) < 0.5) {
    static constexpr double c[] = {1.0,
                                   -1.0 / 6.0,
                                   1.0 / 120.0,
                                   -1.0 / 5040.0,
                                   1.0 / 362880.0,
                                   -1.0 / 39916800.0,
                                   1.0 / 6227020800.0,
                                   -1.0 / 1307674368000.0,
                                   1.0 / 355687428096000.0};
    const S x2 = x * x;
    S acc = S(c[8]);
    for (int n = 7; n >= 0; --n) acc = acc * x2 + S(c[n]);
    return acc;
  }
  return sin(x) / x;
}

// cos(pi x/2)/(1 - x^2); finite at x = +-1 where it equals pi/4.
template <class S>
S shell_q(const S& x) {
  constexpr double h = pi / 2;
  if (real_value(x) >= 0) return h * sinc(h * (1.0 - x)) / (1.0 + x);
  return h * sinc(h * (1.0 + x)) / (1.0 - x);
}

// sin(pi x)/(x (1 - x^2)); finite at x = 0 (pi) and x = +-1 (pi/2).
template <class S>
S gap_kernel_h(const S& x) {
  const double y = real_value(x);
  if (std::abs(y) < 0.5) return pi * sinc(pi * x) / (1.0 - x * x);
  if (y > 0) return pi * sinc(pi * (1.0 - x)) / (x * (1.0 + x));
  return pi * sinc(pi * (1.0 + x)) / (-x * (1.0 - x));
}

// The spectral function A as a function of x = a + k:
// (1 + cos pi x)/(x^2 - 1)^2 = 2 q(x)^2.
template <class S>
S spectral_A_at(const S& x) {
  const S q = shell_q(x);
  return 2.0 * q * q;
}

// Second derivative of A at x, exact through a second-order jet.
inline double spectral_A_d2_at(double x) {
  const auto a = spectral_A_at(Jet<double, 2>::variable(x));
  return a.derivative(2);
}

// A''(1) in closed form.
inline constexpr double spectral_A_d2_shell = 3.0 * pi * pi / 16.0 - pi * pi * pi * pi / 48.0;

// Explicit bracket form of A''(x); singular-looking at x = +-1, used away from
// the shell and in oscillatory tails.
inline double spectral_A_d2_bracket(double x) {
  const double d = x * x - 1.0;
  const double c = std::cos(pi * x), s = std::sin(pi * x);
  const double poly = 20.0 * x * x + 4.0;
  return ((1.0 + c) * poly + 8.0 * pi * x * d * s - pi * pi * d * d * c) / (d * d * d * d);
}

// Fourier transform of the switching profile:
// I(x) = int_0^pi sin t e^{ixt} dt = (1 + e^{i pi x})/(1 - x^2) = 2 e^{i pi x/2} q(x).
template <class S>
complexify_t<S> switching_transform(const S& x) {
  using std::cos;
  using std::sin;
  using C = complexify_t<S>;
  const S ph = (pi / 2) * x;
  const C phase = C(cos(ph)) + I_unit * C(sin(ph));
  return 2.0 * phase * C(shell_q(x));
}

// I'(x) for a real argument.
inline cd switching_transform_d1(double x) {
  return switching_transform(Jet<double, 1>::variable(x))[1];
}

// I'(x) for a jet argument that is linear in the infinitesimal (x0 + c e).
template <int N>
Jet<cd, N> switching_transform_d1(const Jet<double, N>& x) {
  const auto iy = switching_transform(Jet<double, N + 1>::variable(x[0]));
  const double c = N >= 1 ? x[1] : 0.0;
  Jet<cd, N> r;
  double cm = 1.0;
  for (int m = 0; m <= N; ++m) {
    r[m] = double(m + 1) * iy[m + 1] * cm;
    cm *= c;
  }
  return r;
}

namespace detail {
// 8-point Gauss-Legendre on [0, 1]
inline const Eigen::Array<double, 8, 1>& gl8_nodes() {
  static const Eigen::Array<double, 8, 1> x = [] {
    Eigen::Array<double, 8, 1> t;
    t << -0.9602898564975363, -0.7966664774136267, -0.5255324099163290, -0.1834346424956498,
        0.1834346424956498, 0.5255324099163290, 0.7966664774136267, 0.9602898564975363;
    return Eigen::Array<double, 8, 1>(0.5 * (t + 1.0));
  }();
  return x;
}
inline const Eigen::Array<double, 8, 1>& gl8_weights() {
  static const Eigen::Array<double, 8, 1> w = [] {
    Eigen::Array<double, 8, 1> t;
    t << 0.1012285362903763, 0.2223810344533745, 0.3137066458778873, 0.3626837833783620,
        0.3626837833783620, 0.3137066458778873, 0.2223810344533745, 0.1012285362903763;
    return Eigen::Array<double, 8, 1>(0.5 * t);
  }();
  return w;
}
inline constexpr double divided_difference_switch = 0.5;
}  // namespace detail

// K(u, w) = [I(u + w) - I(u)]/(i w); for small |w| the divided difference is
// replaced by the mean of I' over [u, u + w].
template <class S>
complexify_t<S> divided_kernel(const S& u, const S& w) {
  using C = complexify_t<S>;
  if (std::abs(real_value(w)) >= detail::divided_difference_switch) {
    return (switching_transform(u + w) - switching_transform(u)) / (C(w) * I_unit);
  }
  const auto& x = detail::gl8_nodes();
  const auto& wt = detail::gl8_weights();
  C acc(0.0);
  for (int j = 0; j < 8; ++j) acc += wt(j) * switching_transform_d1(S(u + x(j) * w));
  return acc * (-I_unit);
}

// Time-ordered double integral over the switching window,
// T(u, v) = int_0^pi dt1 int_0^t1 dt2 sin t1 sin t2 e^{i u t1} e^{i v t2},
// in a form that is regular on the shells v = +-1.
template <class S>
complexify_t<S> time_ordered_kernel(const S& u, const S& v) {
  return (divided_kernel(u, S(v + 1.0)) - divided_kernel(u, S(v - 1.0))) / (2.0 * I_unit);
}

// Printed closed form of one j-term of the V template in (alpha, beta):
// e^{i pi alpha}/(1 - (alpha+beta)^2) [ i(2 alpha + beta) h(alpha)/2
//   + (e^{-i pi alpha} + e^{-i pi beta})/(1 - (alpha-beta)^2) ].
// Singular (0/0) on alpha + beta = +-1; everything else is evaluated stably.
inline cd time_ordered_kernel_printed(double alpha, double beta) {
  const cd bracket = I_unit * (2.0 * alpha + beta) * 0.5 * gap_kernel_h(alpha) +
                     2.0 * std::exp(-I_unit * (pi * (alpha + beta) / 2)) * shell_q(alpha - beta);
  const double v = alpha + beta;
  return std::exp(I_unit * (pi * alpha)) * bracket / (1.0 - v * v);
}

// Spectral function B(k) at gap a (same formula as the bracket above).
inline cd spectral_B(double k, double a) {
  return I_unit * (2.0 * a + k) * 0.5 * gap_kernel_h(a) +
         2.0 * std::exp(-I_unit * (pi * (a + k) / 2)) * shell_q(a - k);
}

inline double spectral_A(double k, double a) { return spectral_A_at(a + k); }

// Second derivatives of T along u and v, through second-order jets.
inline cd time_ordered_kernel_uu(double u, double v) {
  using J = Jet<double, 2>;
  return time_ordered_kernel(J::variable(u), J(v)).derivative(2);
}
inline cd time_ordered_kernel_vv(double u, double v) {
  using J = Jet<double, 2>;
  return time_ordered_kernel(J(u), J::variable(v)).derivative(2);
}

inline double switching(double t, double sigma) {
  if (t < 0.0 || t > pi * sigma) return 0.0;
  return std::sin(t / sigma);
}

}  // namespace udw
