#ifndef KGAMMA_EVAL_HPP
#define KGAMMA_EVAL_HPP

#include <string>

#include "kgamma/precision.hpp"

namespace kgamma {

enum class Backend {
  Reduction,   // classical-gamma reduction Gamma_k(x) = k^(x/k-1) Gamma(x/k)
  Series,      // defining series / Stirling form with certified remainder
  Quadrature,  // integral representations (oracles module)
  Limit,       // limit-definition sequence, low precision sanity only
};

inline const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Reduction: return "reduction";
    case Backend::Series: return "series";
    case Backend::Quadrature: return "quadrature";
    case Backend::Limit: return "limit";
  }
  return "?";
}

inline Backend backend_from_name(const std::string& s) {
  if (s == "reduction") return Backend::Reduction;
  if (s == "series") return Backend::Series;
  if (s == "quadrature") return Backend::Quadrature;
  if (s == "limit") return Backend::Limit;
  throw domain_error("unknown backend: " + s);
}

// A computed value with a conservative absolute error bound.  Two results
// for the same quantity must satisfy |v1 - v2| <= b1 + b2 regardless of
// backend; that cross-agreement is what the backend-triangle tests check.
template <class R>
struct Eval {
  R value{};
  R abs_error_bound{};
  Backend backend = Backend::Reduction;
  int digits_requested = 16;

  bool agrees_with(const Eval& other) const {
    using std::fabs;
    return fabs(value - other.value) <= abs_error_bound + other.abs_error_bound;
  }
};

template <class R>
Eval<R> make_eval(const R& value, const R& bound, Backend b,
                  const PrecisionConfig& prec) {
  using std::fabs;
  Eval<R> e;
  e.value = value;
  e.abs_error_bound = fabs(bound);
  e.backend = b;
  e.digits_requested = prec.target_digits;
  return e;
}

}  // namespace kgamma

#endif  // KGAMMA_EVAL_HPP
