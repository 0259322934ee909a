#ifndef KGAMMA_KCORE_HPP
#define KGAMMA_KCORE_HPP

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <cmath>

#include "kgamma/eval.hpp"
#include "kgamma/precision.hpp"

namespace kgamma {

// Parameter triple shared by all claims: scale k > 0, multiplication order
// m >= 2, derivative order r >= 1.  Parameters are binary64 values; the
// working arithmetic promotes them.
struct KParams {
  double k = 1.0;
  int m = 2;
  int r = 1;

  KParams() = default;
  KParams(double k_, int m_, int r_ = 1) : k(k_), m(m_), r(r_) { validate(); }

  void validate() const {
    if (!(k > 0)) throw domain_error("KParams: k must be > 0");
    if (m < 2) throw domain_error("KParams: m must be >= 2");
    if (r < 1) throw domain_error("KParams: r must be >= 1");
  }
};

namespace detail {

template <class R>
void require_positive(const R& x, const R& k, const char* who) {
  if (!(x > 0)) throw domain_error(std::string(who) + ": x must be > 0");
  if (!(k > 0)) throw domain_error(std::string(who) + ": k must be > 0");
}

// ln Gamma(z) by recurrence shift plus the Stirling-de Moivre series with
// the first omitted Bernoulli term as remainder bound.  Independent of the
// library lgamma; this is the "series" route.
template <class R>
Eval<R> lngamma_stirling(R z, const PrecisionConfig& prec) {
  using std::fabs;
  using std::log;
  const int digits = std::numeric_limits<R>::digits10;
  const R z0 = R(digits + 8) / R(2.7);

  R shift_acc = 0;
  R shift_mag = 0;
  int shifts = 0;
  while (z < z0) {
    shift_acc -= log(z);
    shift_mag += fabs(log(z));
    z += 1;
    ++shifts;
  }

  const R base = (z - R(0.5)) * log(z) - z + log(2 * pi_const<R>()) / 2;
  R sum = 0;
  R term_mag_acc = 0;
  R zpow = z;  // z^(2n-1)
  const R z2 = z * z;
  R prev = std::numeric_limits<R>::max();
  R remainder = 0;
  for (unsigned n = 1; n < 120; ++n) {
    const R b2n = boost::math::bernoulli_b2n<R>(static_cast<int>(n));
    const R term = b2n / (R(2 * n) * R(2 * n - 1) * zpow);
    if (fabs(term) >= prev) {  // divergent regime reached
      remainder = prev;
      break;
    }
    if (fabs(term) < machine_eps<R>() * (fabs(base) + 1)) {
      remainder = fabs(term);
      break;
    }
    sum += term;
    term_mag_acc += fabs(term);
    prev = fabs(term);
    zpow *= z2;
    remainder = prev;
  }

  const R value = base + sum + shift_acc;
  const R bound = remainder +
                  round_bound<R>(fabs(base) + term_mag_acc + shift_mag,
                                 12 + 2 * shifts);
  return make_eval(value, bound, Backend::Series, prec);
}

// Tail of sum_{n=N..inf} x/(nk(nk+x)) via Euler-Maclaurin; remainder is
// twice the first omitted correction term.
template <class R>
void digamma_series_tail(const R& a /* x/k */, const R& k, int N, R& tail,
                         R& bound) {
  using std::fabs;
  using std::log;
  const R rn = R(N);
  const R fN = (R(1) / rn - R(1) / (rn + a)) / k;
  tail = log((rn + a) / rn) / k + fN / 2;
  R n2j = rn * rn;            // N^(2j)
  R na2j = (rn + a) * (rn + a);
  R prev = std::numeric_limits<R>::max();
  R rem = 0;
  for (unsigned j = 1; j < 80; ++j) {
    const R b2j = boost::math::bernoulli_b2n<R>(static_cast<int>(j));
    const R term = b2j / (R(2 * j) * k) * (R(1) / n2j - R(1) / na2j);
    if (fabs(term) >= prev) {
      rem = 2 * prev;
      break;
    }
    if (fabs(term) < machine_eps<R>() * (fabs(tail) + machine_eps<R>())) {
      rem = 2 * fabs(term);
      break;
    }
    tail += term;
    prev = fabs(term);
    rem = 2 * prev;
    n2j *= rn * rn;
    na2j *= (rn + a) * (rn + a);
  }
  bound = rem;
}

// Tail of sum_{n=N..inf} r!/(nk+x)^(r+1), same scheme.  The leading term
// is the integral r!/(r k (Nk+x)^r).
template <class R>
void polygamma_series_tail(int r, const R& x, const R& k, int N, R& tail,
                           R& bound) {
  using std::fabs;
  using std::pow;
  R rfact = 1;
  for (int i = 2; i <= r; ++i) rfact *= i;
  const R base = R(N) * k + x;
  const R gN = rfact / pow(base, R(r + 1));
  tail = rfact / (R(r) * k * pow(base, R(r))) + gN / 2;
  // B_{2j}/(2j)! * k^(2j-1) (r+2j-1)!/(Nk+x)^(r+2j)
  R prev = std::numeric_limits<R>::max();
  R rem = 0;
  R kpow = k;                        // k^(2j-1)
  R fact = rfact * R(r + 1);         // (r+2j-1)! starting at j=1
  R bpow = pow(base, R(r + 2));      // (Nk+x)^(r+2j)
  R f2j = 2;                         // (2j)!
  for (unsigned j = 1; j < 80; ++j) {
    const R b2j = boost::math::bernoulli_b2n<R>(static_cast<int>(j));
    const R term = b2j / f2j * kpow * fact / bpow;
    if (fabs(term) >= prev) {
      rem = 2 * prev;
      break;
    }
    if (fabs(term) < machine_eps<R>() * (fabs(tail) + machine_eps<R>())) {
      rem = 2 * fabs(term);
      break;
    }
    tail += term;
    prev = fabs(term);
    rem = 2 * prev;
    kpow *= k * k;
    fact *= R(r + 2 * j) * R(r + 2 * j + 1);
    bpow *= base * base;
    f2j *= R(2 * j + 1) * R(2 * j + 2);
  }
  bound = rem;
}

}  // namespace detail

// (x)_{n,k} = x(x+k)...(x+(n-1)k); empty product for n = 0.
template <class R>
R pochhammer_k(const R& x, int n, const R& k) {
  detail::require_positive(x, k, "pochhammer_k");
  if (n < 0) throw domain_error("pochhammer_k: n must be >= 0");
  R p = 1;
  for (int j = 0; j < n; ++j) p *= x + R(j) * k;
  return p;
}

template <class R>
Eval<R> ln_gamma_k(const R& x, const R& k, Backend backend,
                   const PrecisionConfig& prec) {
  using std::fabs;
  using std::log;
  detail::require_positive(x, k, "ln_gamma_k");
  const R z = x / k;
  const R scale = (z - 1) * log(k);
  if (backend == Backend::Reduction) {
    const R value = scale + boost::math::lgamma(z);
    const R bound = 64 * machine_eps<R>() * (fabs(value) + 1);
    return make_eval(value, bound, Backend::Reduction, prec);
  }
  if (backend == Backend::Series) {
    Eval<R> lg = detail::lngamma_stirling(z, prec);
    const R value = scale + lg.value;
    const R bound =
        lg.abs_error_bound + round_bound<R>(fabs(scale) + fabs(value), 6);
    return make_eval(value, bound, Backend::Series, prec);
  }
  throw domain_error("ln_gamma_k: backend not supported here (quadrature "
                     "lives in the oracles module)");
}

template <class R>
Eval<R> ln_gamma_k(const R& x, const R& k, const PrecisionConfig& prec) {
  return ln_gamma_k(x, k, Backend::Reduction, prec);
}

// Threshold on ln Gamma_k beyond which gamma_k refuses to exponentiate and
// signals overflow; callers working at that scale should stay in log space.
inline double gamma_k_overflow_ln() { return 2.3e5; }

template <class R>
Eval<R> gamma_k(const R& x, const R& k, Backend backend,
                const PrecisionConfig& prec) {
  using std::exp;
  using std::fabs;
  Eval<R> L = ln_gamma_k(x, k, backend, prec);
  if (L.value > R(gamma_k_overflow_ln()))
    throw overflow_signal("gamma_k: result exceeds representable policy "
                          "range; use ln_gamma_k");
  const R value = exp(L.value);
  const R bound = value * (L.abs_error_bound + 8 * machine_eps<R>());
  return make_eval(value, bound, backend, prec);
}

template <class R>
Eval<R> gamma_k(const R& x, const R& k, const PrecisionConfig& prec) {
  return gamma_k(x, k, Backend::Reduction, prec);
}

template <class R>
Eval<R> digamma_k(const R& x, const R& k, Backend backend,
                  const PrecisionConfig& prec) {
  using std::fabs;
  using std::log;
  detail::require_positive(x, k, "digamma_k");
  if (backend == Backend::Reduction) {
    const R value = log(k) / k + boost::math::digamma(x / k) / k;
    const R bound =
        64 * machine_eps<R>() * (fabs(value) + (1 + fabs(log(k))) / k + 1);
    return make_eval(value, bound, Backend::Reduction, prec);
  }
  if (backend == Backend::Series) {
    // Recurrence shift until x/k >= 8, then the defining series with an
    // Euler-Maclaurin tail.
    R xs = x;
    R shift_acc = 0;
    R shift_mag = 0;
    int shifts = 0;
    while (xs / k < 8) {
      shift_acc -= 1 / xs;
      shift_mag += 1 / xs;
      xs += k;
      ++shifts;
    }
    const R a = xs / k;
    const int N = 40;
    R sum = 0;
    for (int n = 1; n < N; ++n) sum += (R(1) / n - R(1) / (n + a)) / k;
    R tail = 0, tail_bound = 0;
    detail::digamma_series_tail(a, k, N, tail, tail_bound);
    const R value =
        (log(k) - euler_gamma<R>()) / k - 1 / xs + sum + tail + shift_acc;
    const R bound = tail_bound +
                    round_bound<R>(fabs(sum) + fabs(tail) + shift_mag +
                                       (1 + fabs(log(k))) / k,
                                   2 * N + 2 * shifts + 10);
    return make_eval(value, bound, Backend::Series, prec);
  }
  throw domain_error("digamma_k: backend not supported here");
}

template <class R>
Eval<R> digamma_k(const R& x, const R& k, const PrecisionConfig& prec) {
  return digamma_k(x, k, Backend::Reduction, prec);
}

template <class R>
Eval<R> polygamma_k(int r, const R& x, const R& k, Backend backend,
                    const PrecisionConfig& prec) {
  using std::fabs;
  using std::pow;
  detail::require_positive(x, k, "polygamma_k");
  if (r < 1) throw domain_error("polygamma_k: order r must be >= 1");
  const R sign = (r % 2 == 0) ? R(-1) : R(1);  // (-1)^(r+1)
  if (backend == Backend::Reduction) {
    const R value = boost::math::polygamma(r, x / k) / pow(k, R(r + 1));
    const R bound = 64 * machine_eps<R>() * fabs(value) * (r + 2);
    return make_eval(value, bound, Backend::Reduction, prec);
  }
  if (backend == Backend::Series) {
    // Partial sum of r!/(nk+x)^(r+1) plus Euler-Maclaurin tail; N chosen
    // so the correction terms bottom out below working epsilon.
    const int digits = std::numeric_limits<R>::digits10;
    const double a = static_cast<double>(x / k);
    int N = static_cast<int>(0.45 * digits + r + 10 - std::min(a, 1e9));
    if (N < 8) N = 8;
    R rfact = 1;
    for (int i = 2; i <= r; ++i) rfact *= i;
    R sum = 0;
    for (int n = 0; n < N; ++n) sum += rfact / pow(R(n) * k + x, R(r + 1));
    R tail = 0, tail_bound = 0;
    detail::polygamma_series_tail(r, x, k, N, tail, tail_bound);
    const R mag = sum + tail;
    const R value = sign * mag;
    const R bound =
        tail_bound + round_bound<R>(fabs(mag), 2 * N + 20);
    return make_eval(value, bound, Backend::Series, prec);
  }
  throw domain_error("polygamma_k: backend not supported here");
}

template <class R>
Eval<R> polygamma_k(int r, const R& x, const R& k,
                    const PrecisionConfig& prec) {
  return polygamma_k(r, x, k, Backend::Reduction, prec);
}

// psi_k^(r-1) with psi_k^(0) meaning psi_k itself; the certifier closed
// forms are phrased in these shifted orders.
template <class R>
Eval<R> polygamma_k_or_digamma(int order, const R& x, const R& k,
                               Backend backend, const PrecisionConfig& prec) {
  if (order == 0) return digamma_k(x, k, backend, prec);
  return polygamma_k(order, x, k, backend, prec);
}

}  // namespace kgamma

#endif  // KGAMMA_KCORE_HPP
