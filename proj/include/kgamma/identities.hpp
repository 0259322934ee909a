#ifndef KGAMMA_IDENTITIES_HPP
#define KGAMMA_IDENTITIES_HPP

#include <cmath>
#include <string>

#include "kgamma/kcore.hpp"

// Residuals of the multiplication/recurrence identities at given points,
// judged against precision-aware thresholds.  All gamma-ratio identities
// are checked in log space.  Pass threshold is 10x the combined operand
// bounds: genuine identity violations are O(1), not O(ulp).

namespace kgamma {

constexpr double kIdentitySafetyFactor = 10.0;

template <class R>
struct IdentityOutcome {
  std::string identity_id;
  double x = 0, k = 0, t = 0;
  int m = 0, r = 0, n = 0;
  Eval<R> lhs, rhs;
  R residual{};
  R threshold{};
  bool pass = false;
};

namespace detail {

template <class R>
IdentityOutcome<R> finish(IdentityOutcome<R> o) {
  using std::fabs;
  o.residual = o.lhs.value - o.rhs.value;
  o.threshold = R(kIdentitySafetyFactor) *
                (o.lhs.abs_error_bound + o.rhs.abs_error_bound);
  o.pass = fabs(o.residual) <= o.threshold;
  return o;
}

template <class R>
R ln_factorial(int n) {  // ln((n-1)!) for n >= 1 via exact product
  R p = 0;
  using std::log;
  for (int i = 2; i < n; ++i) p += log(R(i));
  return p;
}

}  // namespace detail

// ln Gamma_k(x+k) = ln x + ln Gamma_k(x)
template <class R>
IdentityOutcome<R> check_recurrence(const R& x, const R& k,
                                    const PrecisionConfig& prec,
                                    Backend backend = Backend::Reduction) {
  using std::log;
  IdentityOutcome<R> o;
  o.identity_id = "recurrence";
  o.x = static_cast<double>(x);
  o.k = static_cast<double>(k);
  using std::fabs;
  o.lhs = ln_gamma_k(x + k, k, backend, prec);
  Eval<R> g = ln_gamma_k(x, k, backend, prec);
  o.rhs = make_eval(log(x) + g.value,
                    g.abs_error_bound +
                        round_bound<R>(fabs(log(x)) + fabs(g.value) + 1, 4),
                    backend, prec);
  return detail::finish(o);
}

// Gauss multiplication (the k-analogue), in log space.
template <class R>
IdentityOutcome<R> check_gauss_multiplication(const R& x, const R& k, int m,
                                              const PrecisionConfig& prec,
                                              Backend backend =
                                                  Backend::Reduction) {
  using std::fabs;
  using std::log;
  if (m < 2) throw domain_error("check_gauss_multiplication: m must be >= 2");
  IdentityOutcome<R> o;
  o.identity_id = "gauss-mult";
  o.x = static_cast<double>(x);
  o.k = static_cast<double>(k);
  o.m = m;
  o.lhs = ln_gamma_k(R(m) * x, k, backend, prec);
  R rhs = (R(m) * x / k - R(0.5)) * log(R(m)) + R(m - 1) / 2 * log(k) +
          R(1 - m) / 2 * log(2 * pi_const<R>());
  R rhs_bound = round_bound<R>(fabs(rhs), 12);
  for (int s = 0; s < m; ++s) {
    Eval<R> g = ln_gamma_k(x + R(s) * k / m, k, backend, prec);
    rhs += g.value;
    rhs_bound += g.abs_error_bound;
  }
  o.rhs = make_eval(rhs, rhs_bound, backend, prec);
  return detail::finish(o);
}

// Euler-type product identity (x = k/m specialization of the above).
template <class R>
IdentityOutcome<R> check_euler_product(const R& k, int m,
                                       const PrecisionConfig& prec,
                                       Backend backend = Backend::Reduction) {
  using std::fabs;
  using std::log;
  if (m < 2) throw domain_error("check_euler_product: m must be >= 2");
  IdentityOutcome<R> o;
  o.identity_id = "euler-product";
  o.k = static_cast<double>(k);
  o.m = m;
  R lhs = 0, lhs_bound = 0;
  for (int s = 1; s < m; ++s) {
    Eval<R> g = ln_gamma_k(R(s) * k / m, k, backend, prec);
    lhs += g.value;
    lhs_bound += g.abs_error_bound;
  }
  o.lhs = make_eval(lhs, lhs_bound, backend, prec);
  const R rhs = R(1 - m) / 2 * log(k) + R(m - 1) / 2 * log(2 * pi_const<R>()) -
                log(R(m)) / 2;
  o.rhs = make_eval(rhs, round_bound<R>(fabs(rhs) + 1, 10), backend, prec);
  return detail::finish(o);
}

// psi_k^(r)(mx) = m^(-(r+1)) sum_s psi_k^(r)(x + sk/m), r >= 1.
template <class R>
IdentityOutcome<R> check_polygamma_multiplication(int r, const R& x, const R& k,
                                                  int m,
                                                  const PrecisionConfig& prec,
                                                  Backend backend =
                                                      Backend::Reduction) {
  using std::pow;
  if (r < 1)
    throw domain_error("check_polygamma_multiplication: r must be >= 1");
  if (m < 2)
    throw domain_error("check_polygamma_multiplication: m must be >= 2");
  IdentityOutcome<R> o;
  o.identity_id = "polygamma-mult";
  o.x = static_cast<double>(x);
  o.k = static_cast<double>(k);
  o.m = m;
  o.r = r;
  o.lhs = polygamma_k(r, R(m) * x, k, backend, prec);
  R rhs = 0, rhs_bound = 0;
  for (int s = 0; s < m; ++s) {
    Eval<R> p = polygamma_k(r, x + R(s) * k / m, k, backend, prec);
    rhs += p.value;
    rhs_bound += p.abs_error_bound;
  }
  const R scale = pow(R(m), R(r + 1));
  o.rhs = make_eval(rhs / scale, rhs_bound / scale + round_bound<R>(rhs / scale, 4),
                    backend, prec);
  return detail::finish(o);
}

// Order-0 analogue obtained by logarithmic differentiation of the Gauss
// multiplication formula; carries the extra (ln m)/k term that the
// order >= 1 formula does not have.
template <class R>
IdentityOutcome<R> check_digamma_multiplication(const R& x, const R& k, int m,
                                                const PrecisionConfig& prec,
                                                Backend backend =
                                                    Backend::Reduction) {
  using std::log;
  if (m < 2)
    throw domain_error("check_digamma_multiplication: m must be >= 2");
  IdentityOutcome<R> o;
  o.identity_id = "digamma-mult";
  o.x = static_cast<double>(x);
  o.k = static_cast<double>(k);
  o.m = m;
  using std::fabs;
  o.lhs = digamma_k(R(m) * x, k, backend, prec);
  R rhs = 0, rhs_bound = 0, rhs_mag = 0;
  for (int s = 0; s < m; ++s) {
    Eval<R> p = digamma_k(x + R(s) * k / m, k, backend, prec);
    rhs += p.value;
    rhs_bound += p.abs_error_bound;
    rhs_mag += fabs(p.value);
  }
  rhs = log(R(m)) / k + rhs / m;
  rhs_mag = fabs(log(R(m))) / k + rhs_mag / m;
  o.rhs = make_eval(rhs, rhs_bound / m + round_bound<R>(rhs_mag + 1, 6),
                    backend, prec);
  return detail::finish(o);
}

// Delta(n,t) = sum_{s=1..n} e^(-st/(n+1)) - n e^(-t); the lemma claims
// strict positivity, so pass means Delta exceeds the noise threshold.
template <class R>
IdentityOutcome<R> check_lemma3(int n, const R& t, const PrecisionConfig& prec) {
  using std::exp;
  using std::fabs;
  if (n < 1) throw domain_error("check_lemma3: n must be >= 1");
  if (!(t > 0)) throw domain_error("check_lemma3: t must be > 0");
  IdentityOutcome<R> o;
  o.identity_id = "lemma3";
  o.n = n;
  o.t = static_cast<double>(t);
  R lhs = 0;
  for (int s = 1; s <= n; ++s) lhs += exp(-R(s) * t / (n + 1));
  const R rhs = R(n) * exp(-t);
  o.lhs = make_eval(lhs, round_bound<R>(lhs, 4 * n), Backend::Series, prec);
  o.rhs = make_eval(rhs, round_bound<R>(rhs, 6), Backend::Series, prec);
  o.residual = lhs - rhs;
  o.threshold = R(kIdentitySafetyFactor) *
                (o.lhs.abs_error_bound + o.rhs.abs_error_bound);
  o.pass = o.residual > o.threshold;  // strict positivity with margin
  return o;
}

}  // namespace kgamma

#endif  // KGAMMA_IDENTITIES_HPP
