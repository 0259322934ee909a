#ifndef KGAMMA_CERTIFIER_HPP
#define KGAMMA_CERTIFIER_HPP

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "kgamma/claims.hpp"
#include "kgamma/grid.hpp"
#include "kgamma/identities.hpp"
#include "kgamma/kcore.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

// Evaluates the ratios F and G, their closed-form logarithmic derivatives,
// and certifies the sign patterns and inequalities over grids.  Each
// claim is encoded as a claimed-positive quantity; verdicts are whatever
// the numbers say.  Sign margin: a point certifies (either way) only when
// |value| >= 10x its error bound; anything closer is retried once at
// doubled working precision and otherwise reported indeterminate.

namespace kgamma {

constexpr double kSignMarginFactor = 10.0;

enum class RatioKind { F, G, InvG };

template <class R>
Eval<R> ln_ratio_G(const R& x, const KParams& p, const PrecisionConfig& prec,
                   Backend backend = Backend::Reduction) {
  const R k(p.k);
  Eval<R> num = ln_gamma_k(R(p.m) * x, k, backend, prec);
  Eval<R> den = ln_gamma_k(x, k, backend, prec);
  const R value = num.value - R(p.m) * den.value;
  const R bound = num.abs_error_bound + R(p.m) * den.abs_error_bound +
                  round_bound<R>(value, 4);
  return make_eval(value, bound, backend, prec);
}

template <class R>
Eval<R> ln_ratio_F(const R& x, const KParams& p, const PrecisionConfig& prec,
                   Backend backend = Backend::Reduction) {
  using std::log;
  Eval<R> g = ln_ratio_G(x, p, prec, backend);
  const R value = g.value - R(p.m - 1) * log(x);
  return make_eval(value, g.abs_error_bound + round_bound<R>(value, 4),
                   backend, prec);
}

template <class R>
Eval<R> ratio_F(const R& x, const KParams& p, const PrecisionConfig& prec,
                Backend backend = Backend::Reduction) {
  using std::exp;
  Eval<R> l = ln_ratio_F(x, p, prec, backend);
  const R value = exp(l.value);
  return make_eval(value, value * (l.abs_error_bound + 8 * machine_eps<R>()),
                   backend, prec);
}

template <class R>
Eval<R> ratio_G(const R& x, const KParams& p, const PrecisionConfig& prec,
                Backend backend = Backend::Reduction) {
  using std::exp;
  Eval<R> l = ln_ratio_G(x, p, prec, backend);
  const R value = exp(l.value);
  return make_eval(value, value * (l.abs_error_bound + 8 * machine_eps<R>()),
                   backend, prec);
}

// (ln F)^(r)(x) = m^r psi_k^(r-1)(mx) - m psi_k^(r-1)(x)
//                 + (-1)^r (m-1)(r-1)!/x^r
// by direct differentiation (no multiplication formula involved).
template <class R>
Eval<R> log_deriv_F(int r, const R& x, const KParams& p,
                    const PrecisionConfig& prec,
                    Backend backend = Backend::Reduction) {
  using std::fabs;
  using std::pow;
  if (r < 1) throw domain_error("log_deriv_F: r must be >= 1");
  const R k(p.k);
  const R mr = pow(R(p.m), R(r));
  Eval<R> a = polygamma_k_or_digamma(r - 1, R(p.m) * x, k, backend, prec);
  Eval<R> b = polygamma_k_or_digamma(r - 1, x, k, backend, prec);
  R rfact1 = 1;  // (r-1)!
  for (int i = 2; i < r; ++i) rfact1 *= i;
  const R sign = (r % 2 == 0) ? R(1) : R(-1);
  const R alg = sign * R(p.m - 1) * rfact1 / pow(x, R(r));
  const R value = mr * a.value - R(p.m) * b.value + alg;
  const R mag = mr * fabs(a.value) + R(p.m) * fabs(b.value) + fabs(alg);
  const R bound = mr * a.abs_error_bound + R(p.m) * b.abs_error_bound +
                  round_bound<R>(mag, 8);
  return make_eval(value, bound, backend, prec);
}

// (ln 1/G)^(r)(x) = m psi_k^(r-1)(x) - m^r psi_k^(r-1)(mx)
template <class R>
Eval<R> log_deriv_invG(int r, const R& x, const KParams& p,
                       const PrecisionConfig& prec,
                       Backend backend = Backend::Reduction) {
  using std::fabs;
  using std::pow;
  if (r < 1) throw domain_error("log_deriv_invG: r must be >= 1");
  const R k(p.k);
  const R mr = pow(R(p.m), R(r));
  Eval<R> a = polygamma_k_or_digamma(r - 1, x, k, backend, prec);
  Eval<R> b = polygamma_k_or_digamma(r - 1, R(p.m) * x, k, backend, prec);
  const R value = R(p.m) * a.value - mr * b.value;
  const R mag = R(p.m) * fabs(a.value) + mr * fabs(b.value);
  const R bound = R(p.m) * a.abs_error_bound + mr * b.abs_error_bound +
                  round_bound<R>(mag, 6);
  return make_eval(value, bound, backend, prec);
}

// r-th central finite difference of ln F (or ln 1/G); the independent
// oracle for the closed forms above.
template <class R>
R finite_diff_log_deriv(RatioKind which, int r, const R& x, const KParams& p,
                        const R& h, const PrecisionConfig& prec) {
  using std::pow;
  if (r < 1) throw domain_error("finite_diff_log_deriv: r must be >= 1");
  if (!(h > 0)) throw domain_error("finite_diff_log_deriv: h must be > 0");
  if (!(x - R(r) * h / 2 > 0))
    throw domain_error("finite_diff_log_deriv: stencil leaves (0,inf)");
  auto lnf = [&](const R& t) -> R {
    if (which == RatioKind::F) return ln_ratio_F(t, p, prec).value;
    if (which == RatioKind::InvG) return -ln_ratio_G(t, p, prec).value;
    return ln_ratio_G(t, p, prec).value;
  };
  R sum = 0;
  R binom = 1;
  for (int j = 0; j <= r; ++j) {
    const R node = x + (R(r) / 2 - R(j)) * h;
    sum += ((j % 2 == 0) ? binom : -binom) * lnf(node);
    binom = binom * R(r - j) / R(j + 1);
  }
  return sum / pow(h, R(r));
}

// ---------------------------------------------------------------------------
// Claimed-positive quantities

// For sign-pattern claims the order r is the derivative order; for LEMMA3
// the integer parameter is n and x plays the role of t.
template <class R>
Eval<R> claim_quantity(ClaimId claim, int order, const R& x, const KParams& p,
                       const PrecisionConfig& prec) {
  using std::fabs;
  using std::log;
  const R k(p.k);
  switch (claim) {
    case ClaimId::THM1A_LCM_F: {
      if (order == 0) return ln_ratio_F(x, p, prec);
      Eval<R> d = log_deriv_F(order, x, p, prec);
      const R sign = (order % 2 == 0) ? R(1) : R(-1);
      return make_eval(sign * d.value, d.abs_error_bound, d.backend, prec);
    }
    case ClaimId::THM1B_LCM_INVG: {
      if (order == 0) {
        Eval<R> g = ln_ratio_G(x, p, prec);
        return make_eval(-g.value, g.abs_error_bound, g.backend, prec);
      }
      Eval<R> d = log_deriv_invG(order, x, p, prec);
      const R sign = (order % 2 == 0) ? R(1) : R(-1);
      return make_eval(sign * d.value, d.abs_error_bound, d.backend, prec);
    }
    case ClaimId::COR1_LOWER:
    case ClaimId::COR1_UPPER:
    case ClaimId::COR1_REV_LOWER:
    case ClaimId::COR1_REV_UPPER:
    case ClaimId::COR1_REVERSED: {
      Eval<R> g = ln_ratio_G(x, p, prec);
      const R ln_kb = R(p.m - 1) * log(k) + detail::ln_factorial<R>(p.m);
      const R ln_xb = R(p.m - 1) * log(x) + detail::ln_factorial<R>(p.m);
      const R b = g.abs_error_bound + round_bound<R>(fabs(g.value) + 1, 8);
      const R lower = g.value - ln_kb;   // claimed > 0 above k
      const R upper = ln_xb - g.value;   // claimed > 0 above k
      switch (claim) {
        case ClaimId::COR1_LOWER:
          return make_eval(lower, b, g.backend, prec);
        case ClaimId::COR1_UPPER:
          return make_eval(upper, b, g.backend, prec);
        case ClaimId::COR1_REV_LOWER:
          return make_eval(-lower, b, g.backend, prec);
        case ClaimId::COR1_REV_UPPER:
          return make_eval(-upper, b, g.backend, prec);
        default:  // combined reversed chain: the weaker side decides
          return make_eval(std::min(-lower, -upper), b, g.backend, prec);
      }
    }
    case ClaimId::COR2: {
      Eval<R> g = ln_ratio_G(x, p, prec);
      const R slack = R(p.m - 1) * log(x) - log(R(p.m)) - g.value;
      return make_eval(slack,
                       g.abs_error_bound + round_bound<R>(fabs(slack) + 1, 8),
                       g.backend, prec);
    }
    case ClaimId::COR3_LOWER:
    case ClaimId::COR3_UPPER: {
      Eval<R> t = polygamma_k(1, x, k, prec);
      R avg = 0, avg_bound = 0;
      for (int s = 0; s < p.m; ++s) {
        Eval<R> ts = polygamma_k(1, x + R(s) * k / p.m, k, prec);
        avg += ts.value;
        avg_bound += ts.abs_error_bound;
      }
      avg /= p.m;
      avg_bound /= p.m;
      const R bound = t.abs_error_bound + avg_bound +
                      round_bound<R>(fabs(t.value) + fabs(avg), 2 * p.m + 8);
      if (claim == ClaimId::COR3_LOWER)
        return make_eval(t.value - avg, bound, t.backend, prec);
      const R extra = R(p.m - 1) / (R(p.m) * x * x);
      return make_eval(avg + extra - t.value, bound + round_bound<R>(extra, 4),
                       t.backend, prec);
    }
    case ClaimId::LEMMA3: {
      IdentityOutcome<R> o = check_lemma3(order, x, prec);
      return make_eval(o.residual, o.lhs.abs_error_bound + o.rhs.abs_error_bound,
                       Backend::Series, prec);
    }
  }
  throw domain_error("claim_quantity: unhandled claim");
}

// ---------------------------------------------------------------------------
// Grid certification

struct Witness {
  double x = 0;
  std::string value;
  std::string bound;
  double margin = 0;  // value / (10 * bound)
};

struct CertStats {
  long pass = 0, fail = 0, indeterminate = 0, retried = 0;
};

struct Certificate {
  ClaimId claim{};
  double k = 1;
  int m = 2;
  int r = 0;  // derivative order for sign claims, 0 otherwise
  int n = 0;  // lemma-3 n, 0 otherwise
  GridSpec grid;
  Verdict verdict = Verdict::Indeterminate;
  std::vector<Witness> witnesses;
  CertStats stats;
};

constexpr size_t kMaxWitnesses = 32;

namespace detail {

template <class R>
std::string decimal_string(const R& v, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

struct PointClass {
  int cls = 0;  // +1 pass, -1 fail, 0 indeterminate
  bool retried = false;
  double value = 0, bound = 0, margin = 0;
  std::string value_str, bound_str;
};

template <class R>
PointClass classify_eval(const Eval<R>& q, const PrecisionConfig& prec) {
  PointClass pc;
  const R m = R(kSignMarginFactor) * q.abs_error_bound;
  if (q.value >= m)
    pc.cls = 1;
  else if (q.value <= -m)
    pc.cls = -1;
  pc.value = static_cast<double>(q.value);
  pc.bound = static_cast<double>(q.abs_error_bound);
  pc.margin = (m > 0) ? static_cast<double>(q.value / m)
                      : (q.value > 0 ? 1e308 : -1e308);
  pc.value_str = decimal_string(q.value, prec.target_digits);
  pc.bound_str = decimal_string(q.abs_error_bound, 3);
  return pc;
}

inline PointClass classify_point(ClaimId claim, int order, double x,
                                 const KParams& p,
                                 const PrecisionConfig& prec) {
  PointClass pc;
  if (!prec.needs_hi_tier()) {
    Eval<Real50> q = claim_quantity<Real50>(claim, order, Real50(x), p, prec);
    pc = classify_eval(q, prec);
    if (pc.cls != 0) return pc;
  }
  // indeterminate (or a high-precision request): one retry on the high tier
  PrecisionConfig hi = prec.needs_hi_tier() ? prec : prec.doubled();
  Eval<Real100> q = claim_quantity<Real100>(claim, order, Real100(x), p, hi);
  PointClass pc2 = classify_eval(q, hi);
  pc2.retried = !prec.needs_hi_tier();
  return pc2;
}

}  // namespace detail

// Points are independent; the parallel path evaluates them with OpenMP
// workers and assembles the certificate in grid order, so serial and
// parallel runs produce identical certificates.
inline Certificate certify_points(ClaimId claim, int order,
                                  const std::vector<double>& xs,
                                  const KParams& p, const GridSpec& grid,
                                  const PrecisionConfig& prec, bool parallel) {
  Certificate cert;
  cert.claim = claim;
  cert.k = p.k;
  cert.m = p.m;
  const ClaimInfo& info = claim_info(claim);
  if (info.needs_r) cert.r = order;
  if (claim == ClaimId::LEMMA3) cert.n = order;
  cert.grid = grid;

  std::vector<detail::PointClass> cls(xs.size());
  std::exception_ptr first_error;

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
    for (long i = 0; i < static_cast<long>(xs.size()); ++i) {
      try {
        cls[i] = detail::classify_point(claim, order, xs[i], p, prec);
      } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
        if (!first_error) first_error = std::current_exception();
      }
    }
  } else {
    for (size_t i = 0; i < xs.size(); ++i)
      cls[i] = detail::classify_point(claim, order, xs[i], p, prec);
  }
  if (first_error) std::rethrow_exception(first_error);

  for (size_t i = 0; i < xs.size(); ++i) {
    const auto& c = cls[i];
    if (c.retried) ++cert.stats.retried;
    if (c.cls > 0) {
      ++cert.stats.pass;
    } else {
      (c.cls < 0 ? cert.stats.fail : cert.stats.indeterminate)++;
      if (cert.witnesses.size() < kMaxWitnesses) {
        Witness w;
        w.x = xs[i];
        w.value = c.value_str;
        w.bound = c.bound_str;
        w.margin = c.margin;
        cert.witnesses.push_back(w);
      }
    }
  }
  if (cert.stats.fail > 0)
    cert.verdict = Verdict::Fail;
  else if (cert.stats.indeterminate > 0)
    cert.verdict = Verdict::Indeterminate;
  else
    cert.verdict = Verdict::Pass;
  return cert;
}

// Grid restricted to the claim's domain; a relative neighborhood
// |x/k - 1| < 1e-6 is excluded around the attainment point x = k.
inline std::vector<double> claim_domain_points(const ClaimInfo& info,
                                               const GridSpec& grid,
                                               double k) {
  std::vector<double> xs = grid_points(grid);
  std::vector<double> out;
  for (double x : xs) {
    switch (info.domain) {
      case ClaimDomain::AllPositive:
      case ClaimDomain::TGrid:
        out.push_back(x);
        break;
      case ClaimDomain::XAboveK:
        if (x / k - 1 > 1e-6) out.push_back(x);
        break;
      case ClaimDomain::XBelowK:
        if (1 - x / k > 1e-6) out.push_back(x);
        break;
    }
  }
  if (out.size() < 2)
    throw domain_error(std::string("claim '") + info.cli_name +
                       "': grid does not intersect the claim domain");
  return out;
}

// One certificate per derivative order r = 1..r_max; the r = 0 condition
// (ln h >= 0) is opt-in since it is not part of the usual definition.
inline std::vector<Certificate> certify_sign_pattern(
    ClaimId claim, const KParams& p, int r_max, const GridSpec& grid,
    const PrecisionConfig& prec, bool parallel = true, bool include_r0 = false) {
  if (claim != ClaimId::THM1A_LCM_F && claim != ClaimId::THM1B_LCM_INVG)
    throw domain_error("certify_sign_pattern: not a sign-pattern claim");
  if (r_max < 1) throw domain_error("certify_sign_pattern: r_max must be >= 1");
  const std::vector<double> xs = grid_points(grid);
  std::vector<Certificate> out;
  for (int r = include_r0 ? 0 : 1; r <= r_max; ++r)
    out.push_back(certify_points(claim, r, xs, p, grid, prec, parallel));
  return out;
}

inline Certificate certify_claim(ClaimId claim, const KParams& p,
                                 const GridSpec& grid,
                                 const PrecisionConfig& prec,
                                 bool parallel = true) {
  const ClaimInfo& info = claim_info(claim);
  if (info.needs_r) {
    const std::vector<double> xs = grid_points(grid);
    return certify_points(claim, p.r, xs, p, grid, prec, parallel);
  }
  if (claim == ClaimId::LEMMA3)
    throw domain_error("certify_claim: use certify_lemma3 for the (n,t) sweep");
  const std::vector<double> xs = claim_domain_points(info, grid, p.k);
  return certify_points(claim, 0, xs, p, grid, prec, parallel);
}

// One certificate per n over the t-grid.
inline std::vector<Certificate> certify_lemma3(
    const std::vector<int>& n_list, const GridSpec& t_grid,
    const PrecisionConfig& prec, bool parallel = true) {
  const std::vector<double> ts = grid_points(t_grid);
  std::vector<Certificate> out;
  KParams dummy;
  for (int n : n_list) {
    if (n < 1) throw domain_error("certify_lemma3: n must be >= 1");
    out.push_back(
        certify_points(ClaimId::LEMMA3, n, ts, dummy, t_grid, prec, parallel));
  }
  return out;
}

}  // namespace kgamma

#endif  // KGAMMA_CERTIFIER_HPP
