#ifndef KGAMMA_ORACLES_HPP
#define KGAMMA_ORACLES_HPP

#include <cmath>

#include "kgamma/eval.hpp"
#include "kgamma/kcore.hpp"
#include "kgamma/quadrature.hpp"

// Slow but independently trustworthy evaluations of the integral and limit
// representations, used to cross-validate the kcore backends.  Improper
// integrals are cut at an upper point chosen from an explicit analytic
// tail bound; the bound goes into the reported error.

namespace kgamma {
namespace detail {

// Smallest T (by doubling) with tail_bound(T) <= goal.
template <class R, class F>
R solve_cutoff(const F& tail_bound, R t_start, const R& goal) {
  R t = t_start;
  for (int i = 0; i < 400; ++i) {
    if (tail_bound(t) <= goal) return t;
    t *= 2;
  }
  throw convergence_error("solve_cutoff: tail bound does not reach goal");
}

// int_0^eps t^(a-1) e^(-xt) dt as an alternating series in powers of x*eps;
// remainder bounded by the first omitted term.
template <class R>
void incomplete_power_series(const R& a, const R& x, const R& eps, R& value,
                             R& bound) {
  using std::fabs;
  using std::pow;
  R term = pow(eps, a) / a;  // j = 0
  value = term;
  R coef = 1;  // (-x)^j / j!
  for (int j = 1; j < 200; ++j) {
    coef *= -x / j;
    term = coef * pow(eps, a + R(j)) / (a + R(j));
    value += term;
    if (fabs(term) < machine_eps<R>() * fabs(value)) break;
  }
  bound = 2 * fabs(term);
}

}  // namespace detail

// int_0^inf t^r e^(-xt) dt; must reproduce r!/x^(r+1) -- the quadrature
// self-test for the exponential-kernel integrands.
template <class R>
Eval<R> power_kernel_integral(int r, const R& x, const QuadratureSpec& spec) {
  using std::exp;
  using std::pow;
  if (r < 0) throw domain_error("power_kernel_integral: r must be >= 0");
  if (!(x > 0)) throw domain_error("power_kernel_integral: x must be > 0");
  const R tol(spec.abs_tolerance);
  R T;
  if (spec.upper_cutoff > 0) {
    T = R(spec.upper_cutoff);
  } else {
    // tail <= 2 (xT)^r e^(-xT) / x^(r+1) once xT >= 2r+2
    auto tail = [&](const R& t) {
      return 2 * pow(x * t, R(r)) * exp(-x * t) / pow(x, R(r + 1));
    };
    T = detail::solve_cutoff(tail, R(2 * r + 2) / x + 1, tol / 2);
  }
  auto f = [&](const R& t) { return pow(t, R(r)) * exp(-x * t); };
  auto q = integrate_adaptive<R>(f, R(0), T, spec);
  PrecisionConfig prec;
  return make_eval(q.value, q.error_estimate + tol / 2, Backend::Quadrature,
                   prec);
}

// int_0^inf t^(x-1) e^(-t^k/k) dt.  Split: an alternating series on
// (0,eps) handles the integrable t^(x-1) endpoint, adaptive quadrature the
// middle, and a scaled incomplete-gamma estimate bounds the tail.
template <class R>
Eval<R> gamma_k_integral(const R& x, const R& k, const QuadratureSpec& spec) {
  using std::exp;
  using std::fabs;
  using std::log;
  using std::pow;
  detail::require_positive(x, k, "gamma_k_integral");
  const R tol(spec.abs_tolerance);
  const R a = x / k;

  // tail: substituting u = t^k/k gives k^(a-1) * int_u0 u^(a-1)e^(-u) du
  // <= 2 k^(a-1) u0^(a-1) e^(-u0) for u0 >= 2*max(a-1, 1)
  R T;
  if (spec.upper_cutoff > 0) {
    T = R(spec.upper_cutoff);
  } else {
    const R u_start = 2 * (a > 2 ? a - 1 : R(1)) + 1;
    auto tail = [&](const R& u0) {
      return 2 * pow(k, a - 1) * pow(u0, a - 1) * exp(-u0);
    };
    const R u0 = detail::solve_cutoff(tail, u_start, tol / 2);
    T = pow(k * u0, 1 / k);
  }

  // head (0, eps): sum_j (-1/k)^j/j! eps^(x+jk)/(x+jk), eps^k <= k/2
  R eps_split = pow(k / 2, 1 / k);
  if (eps_split > R(0.5)) eps_split = R(0.5);
  if (eps_split > T / 4) eps_split = T / 4;
  R head = 0, head_bound = 0;
  {
    R coef = 1;  // (-1/k)^j / j!
    R term = 0;
    for (int j = 0; j < 400; ++j) {
      term = coef * pow(eps_split, x + R(j) * k) / (x + R(j) * k);
      head += term;
      if (fabs(term) < machine_eps<R>() * (fabs(head) + 1)) break;
      coef *= -1 / (k * R(j + 1));
    }
    head_bound = 2 * fabs(term);
  }

  auto f = [&](const R& t) {
    return exp((x - 1) * log(t) - pow(t, k) / k);
  };
  auto q = integrate_adaptive<R>(f, eps_split, T, spec);
  PrecisionConfig prec;
  return make_eval(head + q.value,
                   head_bound + q.error_estimate + tol / 2,
                   Backend::Quadrature, prec);
}

// n-th term of the limit sequence n! k^n (nk)^(x/k-1) / (x)_{n,k};
// converges to Gamma_k(x) at O(1/n), used as a low-precision sanity check.
inline double gamma_k_limit(double x, double k, long n) {
  if (!(x > 0) || !(k > 0))
    throw domain_error("gamma_k_limit: x and k must be > 0");
  if (n < 1) throw domain_error("gamma_k_limit: n must be >= 1");
  double ln = std::lgamma(double(n) + 1) + n * std::log(k) +
              (x / k - 1) * std::log(n * k);
  for (long j = 0; j < n; ++j) ln -= std::log(x + j * k);
  return std::exp(ln);
}

// psi_k(x) via the (0,inf) exponential-kernel representation; this is the
// form the quadrature backend documents and uses.
template <class R>
Eval<R> digamma_k_integral(const R& x, const R& k, const QuadratureSpec& spec) {
  using std::exp;
  using std::expm1;
  using std::fabs;
  using std::log;
  detail::require_positive(x, k, "digamma_k_integral");
  const R tol(spec.abs_tolerance);

  R T;
  if (spec.upper_cutoff > 0) {
    T = R(spec.upper_cutoff);
  } else {
    auto tail = [&](const R& t) {
      return (exp(-k * t) / k + exp(-x * t) / x) / (-expm1(-k * t));
    };
    T = detail::solve_cutoff(tail, R(1), tol / 2);
  }

  // (e^(-kt) - e^(-xt))/(1 - e^(-kt)), cancellation-free via expm1
  auto f = [&](const R& t) {
    return exp(-k * t) * expm1(-(x - k) * t) / expm1(-k * t);
  };
  auto q = integrate_adaptive<R>(f, R(0), T, spec);
  PrecisionConfig prec;
  const R value = (log(k) - euler_gamma<R>()) / k + q.value;
  return make_eval(value, q.error_estimate + tol / 2 +
                              round_bound<R>(fabs(value) + 1, 6),
                   Backend::Quadrature, prec);
}

// The unit-interval form of the same representation (substitution
// t -> e^(-t)); kept as an independent route so the two representations
// can be checked against each other.
template <class R>
Eval<R> digamma_k_integral_unit(const R& x, const R& k,
                                const QuadratureSpec& spec) {
  using std::expm1;
  using std::fabs;
  using std::log;
  using std::pow;
  detail::require_positive(x, k, "digamma_k_integral_unit");

  R eps_split = pow(R(0.5), 1 / k);
  if (eps_split > R(0.1)) eps_split = R(0.1);

  // geometric expansion of 1/(1-t^k) on (0, eps)
  R head = 0, head_bound = 0;
  {
    const R ek = pow(eps_split, k);
    R ejk = 1;
    R term = 0;
    for (int j = 0; j < 2000; ++j) {
      term = ejk * (pow(eps_split, k) / (k * R(j + 1)) -
                    pow(eps_split, x) / (x + R(j) * k));
      head += term;
      if (fabs(term) < machine_eps<R>() * (fabs(head) + 1) && j > 2) break;
      ejk *= ek;
    }
    head_bound = 2 * fabs(term) / (1 - ek);
  }

  // (t^(k-1) - t^(x-1))/(1 - t^k), stable near t = 1
  auto f = [&](const R& t) {
    const R lt = log(t);
    return pow(t, k - 1) * expm1((x - k) * lt) / expm1(k * lt);
  };
  auto q = integrate_adaptive<R>(f, eps_split, R(1), spec);
  PrecisionConfig prec;
  const R value = (log(k) - euler_gamma<R>()) / k + head + q.value;
  return make_eval(value,
                   head_bound + q.error_estimate +
                       round_bound<R>(fabs(value) + 1, 6),
                   Backend::Quadrature, prec);
}

// (-1)^(r+1) int_0^inf t^r e^(-xt)/(1-e^(-kt)) dt.  The (0,eps) piece uses
// the expansion kt/(1-e^(-kt)) = 1 + kt/2 + (kt)^2/12 + O((kt)^4), with
// the O term charged to the bound; eps = 1e-6/k.
template <class R>
Eval<R> polygamma_k_integral(int r, const R& x, const R& k,
                             const QuadratureSpec& spec) {
  using std::exp;
  using std::expm1;
  using std::fabs;
  using std::pow;
  detail::require_positive(x, k, "polygamma_k_integral");
  if (r < 1) throw domain_error("polygamma_k_integral: r must be >= 1");
  const R tol(spec.abs_tolerance);

  R rfact = 1;
  for (int i = 2; i <= r; ++i) rfact *= i;

  R T;
  if (spec.upper_cutoff > 0) {
    T = R(spec.upper_cutoff);
  } else {
    // tail <= Gamma(r+1, xT)/x^(r+1) / (1-e^(-kT)) with
    // Gamma(r+1, y) <= 2 y^r e^(-y) for y >= 2r+2
    auto tail = [&](const R& t) {
      return 2 * pow(x * t, R(r)) * exp(-x * t) / pow(x, R(r + 1)) /
             (-expm1(-k * t));
    };
    T = detail::solve_cutoff(tail, R(2 * r + 2) / x + 1, tol / 2);
  }

  const R eps_split = R(1e-6) / k;
  R head = 0, head_bound = 0;
  {
    R i1, b1, i2, b2, i3, b3;
    detail::incomplete_power_series(R(r), x, eps_split, i1, b1);
    detail::incomplete_power_series(R(r + 1), x, eps_split, i2, b2);
    detail::incomplete_power_series(R(r + 2), x, eps_split, i3, b3);
    head = i1 / k + i2 / 2 + k * i3 / 12;
    // |kt/(1-e^(-kt)) - 1 - kt/2 - (kt)^2/12| <= (kt)^4/720 on (0, eps]
    head_bound = b1 / k + b2 / 2 + k * b3 / 12 +
                 k * k * k * pow(eps_split, R(r + 4)) / (720 * R(r + 4));
  }

  auto f = [&](const R& t) {
    return pow(t, R(r)) * exp(-x * t) / (-expm1(-k * t));
  };
  auto q = integrate_adaptive<R>(f, eps_split, T, spec);
  PrecisionConfig prec;
  const R sign = (r % 2 == 0) ? R(-1) : R(1);
  return make_eval(sign * (head + q.value),
                   head_bound + q.error_estimate + tol / 2,
                   Backend::Quadrature, prec);
}

}  // namespace kgamma

#endif  // KGAMMA_ORACLES_HPP
