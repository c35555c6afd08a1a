#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>
#include <type_traits>

namespace udw {

// Truncated Taylor series c0 + c1 e + ... + cN e^N in one infinitesimal e.
// Arithmetic propagates derivatives exactly through the kernels, which is how
// second derivatives of the template functions are obtained.
template <class Scalar, int N>
class Jet {
 public:
  static_assert(N >= 0);
  using Coeffs = Eigen::Array<Scalar, N + 1, 1>;
  static constexpr int order = N;

  Jet() : c_(Coeffs::Zero()) {}
  Jet(const Scalar& value) : c_(Coeffs::Zero()) { c_(0) = value; }
  explicit Jet(const Coeffs& c) : c_(c) {}

  template <class Other, class = std::enable_if_t<!std::is_same_v<Other, Scalar>>>
  explicit Jet(const Jet<Other, N>& other) : c_(other.coeffs().template cast<Scalar>()) {}

  // x0 + slope*e
  static Jet variable(const Scalar& x0, const Scalar& slope = Scalar(1)) {
    Jet j(x0);
    if constexpr (N >= 1) j.c_(1) = slope;
    return j;
  }

  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }
  const Scalar& operator[](int i) const { return c_(i); }
  Scalar& operator[](int i) { return c_(i); }
  const Scalar& value() const { return c_(0); }

  // i-th derivative with respect to e at e = 0
  Scalar derivative(int i) const {
    Scalar f(1);
    for (int j = 2; j <= i; ++j) f *= Scalar(j);
    return c_(i) * f;
  }

  Jet& operator+=(const Jet& o) { c_ += o.c_; return *this; }
  Jet& operator-=(const Jet& o) { c_ -= o.c_; return *this; }
  Jet& operator*=(const Jet& o) { *this = *this * o; return *this; }
  Jet& operator/=(const Jet& o) { *this = *this / o; return *this; }

  friend Jet operator-(const Jet& x) { return Jet(Coeffs(-x.c_)); }
  friend Jet operator+(const Jet& x, const Jet& y) { return Jet(Coeffs(x.c_ + y.c_)); }
  friend Jet operator-(const Jet& x, const Jet& y) { return Jet(Coeffs(x.c_ - y.c_)); }
  friend Jet operator+(const Jet& x, const Scalar& s) { Jet r = x; r.c_(0) += s; return r; }
  friend Jet operator+(const Scalar& s, const Jet& x) { return x + s; }
  friend Jet operator-(const Jet& x, const Scalar& s) { Jet r = x; r.c_(0) -= s; return r; }
  friend Jet operator-(const Scalar& s, const Jet& x) { Jet r = -x; r.c_(0) += s; return r; }
  friend Jet operator*(const Jet& x, const Scalar& s) { return Jet(Coeffs(x.c_ * s)); }
  friend Jet operator*(const Scalar& s, const Jet& x) { return Jet(Coeffs(x.c_ * s)); }
  friend Jet operator/(const Jet& x, const Scalar& s) { return Jet(Coeffs(x.c_ / s)); }

  friend Jet operator*(const Jet& x, const Jet& y) {
    Jet r;
    for (int k = 0; k <= N; ++k)
      for (int i = 0; i <= k; ++i) r.c_(k) += x.c_(i) * y.c_(k - i);
    return r;
  }

  friend Jet operator/(const Jet& x, const Jet& y) {
    Jet q;
    for (int k = 0; k <= N; ++k) {
      Scalar acc = x.c_(k);
      for (int i = 1; i <= k; ++i) acc -= y.c_(i) * q.c_(k - i);
      q.c_(k) = acc / y.c_(0);
    }
    return q;
  }

  friend Jet operator/(const Scalar& s, const Jet& y) { return Jet(s) / y; }

  friend Jet exp(const Jet& x) {
    Jet e;
    using std::exp;
    e.c_(0) = exp(x.c_(0));
    for (int k = 1; k <= N; ++k) {
      Scalar acc(0);
      for (int j = 1; j <= k; ++j) acc += Scalar(j) * x.c_(j) * e.c_(k - j);
      e.c_(k) = acc / Scalar(k);
    }
    return e;
  }

  friend void sincos(const Jet& x, Jet& s, Jet& c) {
    using std::cos;
    using std::sin;
    s = Jet();
    c = Jet();
    s.c_(0) = sin(x.c_(0));
    c.c_(0) = cos(x.c_(0));
    for (int k = 1; k <= N; ++k) {
      Scalar as(0), ac(0);
      for (int j = 1; j <= k; ++j) {
        as += Scalar(j) * x.c_(j) * c.c_(k - j);
        ac += Scalar(j) * x.c_(j) * s.c_(k - j);
      }
      s.c_(k) = as / Scalar(k);
      c.c_(k) = -ac / Scalar(k);
    }
  }

  friend Jet sin(const Jet& x) { Jet s, c; sincos(x, s, c); return s; }
  friend Jet cos(const Jet& x) { Jet s, c; sincos(x, s, c); return c; }

 private:
  Coeffs c_;
};

template <class T>
struct is_jet : std::false_type {};
template <class S, int N>
struct is_jet<Jet<S, N>> : std::true_type {};

// Complex counterpart of a real scalar type: double -> complex<double>,
// Jet<double,N> -> Jet<complex<double>,N>.
template <class T>
struct complexify { using type = std::complex<T>; };
template <class S, int N>
struct complexify<Jet<S, N>> { using type = Jet<std::complex<S>, N>; };
template <class T>
using complexify_t = typename complexify<T>::type;

inline double real_value(double x) { return x; }
inline double real_value(const std::complex<double>& x) { return x.real(); }
template <class S, int N>
double real_value(const Jet<S, N>& x) { return real_value(x.value()); }

inline std::complex<double> to_complex(double x) { return {x, 0.0}; }
template <int N>
Jet<std::complex<double>, N> to_complex(const Jet<double, N>& x) {
  return Jet<std::complex<double>, N>(x);
}

}  // namespace udw
