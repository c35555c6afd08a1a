#pragma once

// Adaptive Gauss-Kronrod (7/15) integration with removable-singularity
// exclusions, Gaussian and oscillatory semi-infinite tails, and an iterated 2D
// rule. Integrands may return double or std::complex<double>.

#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

namespace udw {

// Envelope exp(-(k/scale)^2); the range is cut where it drops below abs_tol/100.
struct GaussianDamped {
  double scale;
};
// Algebraically decaying integrand with oscillation of the given period;
// summed over half-period panels with epsilon acceleration.
struct OscillatoryPartition {
  double period_hint;
};
// Non-oscillatory algebraic decay (at least 1/k^2); mapped onto (0, 1] by k = k0/t.
struct AlgebraicDecay {};

using TailMode = std::variant<GaussianDamped, OscillatoryPartition, AlgebraicDecay>;

struct QuadratureSpec {
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
  TailMode tail_mode = AlgebraicDecay{};
  double singularity_radius = 1e-4;
  // Initial uniform partition width for finite ranges (0: one interval).
  double panel_width = 0.0;
  int max_panels = 4000;

  QuadratureSpec tightened(double factor) const {
    QuadratureSpec s = *this;
    s.rel_tol /= factor;
    s.abs_tol /= factor;
    return s;
  }
};

template <class T>
struct IntegralValue {
  T value{};
  double err_estimate = 0.0;
  long evaluations = 0;
  bool converged = true;

  IntegralValue& operator+=(const IntegralValue& o) {
    value += o.value;
    err_estimate += o.err_estimate;
    evaluations += o.evaluations;
    converged = converged && o.converged;
    return *this;
  }
  friend IntegralValue operator+(IntegralValue a, const IntegralValue& b) { return a += b; }
  IntegralValue scaled(double f) const {
    IntegralValue r = *this;
    r.value *= f;
    r.err_estimate *= std::abs(f);
    return r;
  }
};

template <class T>
struct Exclusion {
  double center;
  T series_limit;
};

class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, std::complex<double> best, double err)
      : std::runtime_error(what), best_estimate(best), err_estimate(err) {}
  std::complex<double> best_estimate;
  double err_estimate;
};

template <class T>
const T& require(const IntegralValue<T>& v, const char* what = "quadrature did not converge") {
  if (!v.converged) throw NonConvergence(what, std::complex<double>(v.value), v.err_estimate);
  return v.value;
}

namespace detail {

inline double magnitude(double x) { return std::abs(x); }
inline double magnitude(const std::complex<double>& x) { return std::abs(x); }

struct GK15Table {
  Eigen::Array<double, 8, 1> xk;  // Kronrod abscissae, xk(7) = 0
  Eigen::Array<double, 8, 1> wk;
  Eigen::Array<double, 4, 1> wg;  // Gauss weights for xk(1), xk(3), xk(5), xk(7)
};

inline const GK15Table& gk15() {
  static const GK15Table t = [] {
    GK15Table g;
    g.xk << 0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.0;
    g.wk << 0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714;
    g.wg << 0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327;
    return g;
  }();
  return t;
}

template <class T>
struct Segment {
  double a, b;
  T value;
  double err;
  bool operator<(const Segment& o) const { return err < o.err; }
};

template <class T, class F>
Segment<T> gk15_segment(F& f, double a, double b) {
  const auto& g = gk15();
  const double c = 0.5 * (a + b), h = 0.5 * (b - a);
  const T fc = f(c);
  T rk = fc * g.wk(7);
  T rg = fc * g.wg(3);
  double resabs = magnitude(fc) * g.wk(7);
  T fv1[7], fv2[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = h * g.xk(j);
    fv1[j] = f(c - dx);
    fv2[j] = f(c + dx);
    rk += g.wk(j) * (fv1[j] + fv2[j]);
    resabs += g.wk(j) * (magnitude(fv1[j]) + magnitude(fv2[j]));
    if (j % 2 == 1) rg += g.wg(j / 2) * (fv1[j] + fv2[j]);
  }
  const T mean = rk * 0.5;
  double resasc = g.wk(7) * magnitude(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += g.wk(j) * (magnitude(fv1[j] - mean) + magnitude(fv2[j] - mean));
  const double ah = std::abs(h);
  resabs *= ah;
  resasc *= ah;
  double err = magnitude((rk - rg) * h);
  if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  constexpr double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps))
    err = std::max(50.0 * eps * resabs, err);
  return {a, b, T(rk * h), err};
}

}  // namespace detail

template <class F>
using integrand_value_t = std::decay_t<std::invoke_result_t<F&, double>>;

// Adaptive GK15 over [a, b]. Within singularity_radius of each exclusion
// center the integrand is replaced by the straight line joining f(center +- eps)
// to the supplied limit value.
template <class F, class T = integrand_value_t<F>>
IntegralValue<T> integrate_finite(F&& f, double a, double b, const QuadratureSpec& spec,
                                  const std::vector<Exclusion<T>>& exclusions = {}) {
  IntegralValue<T> out;
  if (!(b > a)) return out;
  const double eps = spec.singularity_radius;

  struct Patch {
    double c;
    T limit, left, right;
  };
  std::vector<Patch> patches;
  std::vector<double> cuts{a, b};
  for (const auto& e : exclusions) {
    if (e.center + eps <= a || e.center - eps >= b) continue;
    patches.push_back({e.center, e.series_limit, f(e.center - eps), f(e.center + eps)});
    out.evaluations += 2;
    for (double x : {e.center - eps, e.center, e.center + eps})
      if (x > a && x < b) cuts.push_back(x);
  }
  if (spec.panel_width > 0.0) {
    const long n = static_cast<long>(std::ceil((b - a) / spec.panel_width));
    for (long i = 1; i < n; ++i) cuts.push_back(a + (b - a) * double(i) / double(n));
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  long evals = 0;
  auto g = [&](double x) -> T {
    ++evals;
    for (const auto& p : patches) {
      const double d = x - p.c;
      if (std::abs(d) < eps) {
        const T& edge = d < 0 ? p.left : p.right;
        return p.limit + (edge - p.limit) * (std::abs(d) / eps);
      }
    }
    return f(x);
  };

  std::priority_queue<detail::Segment<T>> heap;
  T total{};
  double total_err = 0.0;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    auto s = detail::gk15_segment<T>(g, cuts[i], cuts[i + 1]);
    total += s.value;
    total_err += s.err;
    heap.push(s);
  }

  int subdivisions = 0;
  bool ok = true;
  auto tolerance = [&] { return std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(total)); };
  while (total_err > tolerance()) {
    if (subdivisions >= spec.max_subdivisions) {
      ok = false;
      break;
    }
    auto worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b) ||
        (worst.b - worst.a) < 1e-13 * std::max(1.0, std::abs(mid))) {
      ok = false;
      break;
    }
    heap.pop();
    auto l = detail::gk15_segment<T>(g, worst.a, mid);
    auto r = detail::gk15_segment<T>(g, mid, worst.b);
    total += l.value + r.value - worst.value;
    total_err += l.err + r.err - worst.err;
    heap.push(l);
    heap.push(r);
    ++subdivisions;
  }

  // resum to shed accumulated rounding in the running totals
  total = T{};
  total_err = 0.0;
  while (!heap.empty()) {
    total += heap.top().value;
    total_err += heap.top().err;
    heap.pop();
  }
  out.value = total;
  out.err_estimate = total_err;
  out.evaluations += evals;
  out.converged = ok;
  return out;
}

namespace detail {

// Wynn epsilon extrapolation of a sequence of partial sums. Returns the
// estimate from the highest even column and a crude error from its last change.
template <class T>
std::pair<T, double> wynn_epsilon(const std::vector<T>& s) {
  const size_t n = s.size();
  if (n < 3) return {s.back(), std::numeric_limits<double>::infinity()};
  std::vector<T> prev(n, T{}), cur(s.begin(), s.end());
  T best = s.back();
  double best_err = magnitude(s[n - 1] - s[n - 2]);
  for (size_t k = 1; cur.size() > 1; ++k) {
    std::vector<T> next(cur.size() - 1);
    bool broke = false;
    for (size_t i = 0; i + 1 < cur.size(); ++i) {
      const T d = cur[i + 1] - cur[i];
      if (magnitude(d) == 0.0) {
        broke = true;
        break;
      }
      next[i] = prev[i + 1] + T(1.0) / d;
    }
    if (broke) break;
    if (k % 2 == 0 && next.size() >= 2) {
      const double e = magnitude(next.back() - next[next.size() - 2]);
      if (e < best_err) {
        best = next.back();
        best_err = e;
      }
    }
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {best, best_err};
}

}  // namespace detail

// Semi-infinite integral over [lower, infinity) according to spec.tail_mode.
template <class F, class T = integrand_value_t<F>>
IntegralValue<T> integrate_semi_infinite(F&& f, const QuadratureSpec& spec, double lower = 0.0) {
  if (const auto* g = std::get_if<GaussianDamped>(&spec.tail_mode)) {
    const double k_max = g->scale * std::sqrt(std::log(100.0 / spec.abs_tol));
    return integrate_finite(f, lower, k_max, spec);
  }
  if (std::holds_alternative<AlgebraicDecay>(spec.tail_mode)) {
    IntegralValue<T> out;
    double k0 = lower;
    if (k0 <= 0.0) {
      k0 = 1.0;
      out = integrate_finite(f, lower, k0, spec);
    }
    QuadratureSpec inner = spec;
    inner.panel_width = 0.0;
    auto mapped = [&](double t) -> T { return f(k0 / t) * (k0 / (t * t)); };
    out += integrate_finite(mapped, 0.0, 1.0, inner);
    return out;
  }
  const double half = 0.5 * std::get<OscillatoryPartition>(spec.tail_mode).period_hint;
  QuadratureSpec panel = spec.tightened(10.0);
  panel.panel_width = 0.0;
  IntegralValue<T> out;
  std::vector<T> partial;
  T sum{};
  double panel_err = 0.0;
  int small_terms = 0;
  constexpr size_t window = 40;
  for (int i = 0; i < spec.max_panels; ++i) {
    const double x0 = lower + half * i;
    auto term = integrate_finite(f, x0, x0 + half, panel);
    out.evaluations += term.evaluations;
    out.converged = out.converged && term.converged;
    panel_err += term.err_estimate;
    sum += term.value;
    partial.push_back(sum);
    if (partial.size() > window) partial.erase(partial.begin());

    const double tol = std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(sum));
    // terms already negligible: the plain partial sum has converged
    small_terms = detail::magnitude(term.value) < 0.1 * tol ? small_terms + 1 : 0;
    if (small_terms >= 3) {
      out.value = sum;
      out.err_estimate = panel_err + 3.0 * detail::magnitude(term.value);
      return out;
    }
    if (partial.size() >= 6) {
      auto [ext, ext_err] = detail::wynn_epsilon(partial);
      std::vector<T> shorter(partial.begin(), partial.end() - 1);
      auto [ext_prev, unused] = detail::wynn_epsilon(shorter);
      const double change = detail::magnitude(ext - ext_prev);
      const double etol = std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(ext));
      if (change + ext_err <= etol) {
        out.value = ext;
        out.err_estimate = panel_err + change + ext_err;
        return out;
      }
    }
  }
  out.value = partial.size() >= 3 ? detail::wynn_epsilon(partial).first : sum;
  out.err_estimate = panel_err + detail::magnitude(out.value - sum);
  out.converged = false;
  return out;
}

// Iterated adaptive integral over [ax, bx] x [ay, by] of f(x, y).
template <class F>
auto integrate_2d(F&& f, double ax, double bx, double ay, double by, const QuadratureSpec& spec)
    -> IntegralValue<std::decay_t<std::invoke_result_t<F&, double, double>>> {
  using T = std::decay_t<std::invoke_result_t<F&, double, double>>;
  const QuadratureSpec inner_spec = spec.tightened(10.0);
  long inner_evals = 0;
  bool inner_ok = true;
  auto outer = [&](double x) -> T {
    auto r = integrate_finite([&](double y) { return f(x, y); }, ay, by, inner_spec);
    inner_evals += r.evaluations;
    inner_ok = inner_ok && r.converged;
    return r.value;
  };
  auto out = integrate_finite(outer, ax, bx, spec);
  out.evaluations = inner_evals;
  out.converged = out.converged && inner_ok;
  return out;
}

}  // namespace udw
