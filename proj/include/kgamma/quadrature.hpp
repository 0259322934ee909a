#ifndef KGAMMA_QUADRATURE_HPP
#define KGAMMA_QUADRATURE_HPP

#include <cmath>
#include <string>
#include <vector>

#include "kgamma/precision.hpp"

namespace kgamma {

struct QuadratureSpec {
  std::string rule = "adaptive-gauss15";
  double abs_tolerance = 1e-30;
  int max_subdivisions = 40000;
  double upper_cutoff = 0;  // 0: computed from the analytic tail bound

  void validate() const {
    if (!(abs_tolerance > 0))
      throw domain_error("QuadratureSpec: abs_tolerance must be > 0");
    if (max_subdivisions < 1)
      throw domain_error("QuadratureSpec: max_subdivisions must be >= 1");
  }
};

template <class R>
struct QuadResult {
  R value{};
  R error_estimate{};
  int subdivisions = 0;
};

namespace detail {

// 15-point Gauss-Legendre nodes/weights on [-1,1], found by Newton on the
// Legendre recurrence at the working precision.  Exact for degree 29.
template <class R>
struct Gauss15 {
  std::vector<R> node, weight;

  Gauss15() {
    using std::cos;
    const int n = 15;
    node.resize(n);
    weight.resize(n);
    for (int i = 0; i < n; ++i) {
      R x = R(std::cos(M_PI * (i + 0.75) / (n + 0.5)));
      for (int it = 0; it < 200; ++it) {
        R p0 = 1, p1 = x;
        for (int j = 2; j <= n; ++j) {
          R p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
          p0 = p1;
          p1 = p2;
        }
        const R dp = n * (x * p1 - p0) / (x * x - 1);
        const R dx = p1 / dp;
        x -= dx;
        if (fabs(dx) < machine_eps<R>() * 4) break;
      }
      R p0 = 1, p1 = x;
      for (int j = 2; j <= n; ++j) {
        R p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      const R dp = n * (x * p1 - p0) / (x * x - 1);
      node[i] = x;
      weight[i] = 2 / ((1 - x * x) * dp * dp);
    }
  }

  static const Gauss15& instance() {
    static const Gauss15 g;
    return g;
  }

  template <class F>
  R apply(const F& f, const R& a, const R& b) const {
    const R half = (b - a) / 2;
    const R mid = (a + b) / 2;
    R s = 0;
    for (size_t i = 0; i < node.size(); ++i)
      s += weight[i] * f(mid + half * node[i]);
    return s * half;
  }
};

}  // namespace detail

// Adaptive bisection: a segment is accepted when the whole-segment rule
// and the two-half sum agree to the segment's share of the tolerance; the
// disagreement is charged to the error estimate (a large overestimate of
// the accepted halves' true error).
template <class R, class F>
QuadResult<R> integrate_adaptive(const F& f, const R& a, const R& b,
                                 const QuadratureSpec& spec) {
  using std::fabs;
  spec.validate();
  const auto& rule = detail::Gauss15<R>::instance();
  const R total_len = b - a;
  const R tol = R(spec.abs_tolerance);

  struct Seg {
    R a, b, whole;
  };
  std::vector<Seg> stack;
  stack.push_back({a, b, rule.apply(f, a, b)});

  QuadResult<R> out;
  while (!stack.empty()) {
    Seg s = stack.back();
    stack.pop_back();
    const R mid = (s.a + s.b) / 2;
    const R left = rule.apply(f, s.a, mid);
    const R right = rule.apply(f, mid, s.b);
    const R err = fabs(s.whole - (left + right));
    const R local_tol = tol * (s.b - s.a) / total_len;
    if (err <= local_tol || out.subdivisions >= spec.max_subdivisions) {
      if (err > local_tol)
        throw convergence_error(
            "integrate_adaptive: tolerance unmet within max_subdivisions");
      out.value += left + right;
      out.error_estimate += err;
    } else {
      ++out.subdivisions;
      stack.push_back({s.a, mid, left});
      stack.push_back({mid, s.b, right});
    }
  }
  return out;
}

}  // namespace kgamma

#endif  // KGAMMA_QUADRATURE_HPP
