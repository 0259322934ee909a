#ifndef KGAMMA_PRECISION_HPP
#define KGAMMA_PRECISION_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/math/constants/constants.hpp>
#include <limits>
#include <stdexcept>
#include <string>

namespace kgamma {

// Working arithmetic tiers. Requests up to 50 significant digits run on
// Real50; anything above (including the automatic indeterminate retry at
// doubled working precision) runs on Real100.
using Real50 = boost::multiprecision::cpp_bin_float_50;
using Real100 = boost::multiprecision::cpp_bin_float_100;

constexpr int kMaxWorkingDigits = 100;

class domain_error : public std::domain_error {
 public:
  explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

class overflow_signal : public std::overflow_error {
 public:
  explicit overflow_signal(const std::string& what)
      : std::overflow_error(what) {}
};

class convergence_error : public std::runtime_error {
 public:
  explicit convergence_error(const std::string& what)
      : std::runtime_error(what) {}
};

// Significant decimal digits of the arithmetic vs the digits actually
// requested of results.  working_digits only selects the tier; every
// error bound is derived from the tier epsilon, so a 34-digit request
// computed on Real50 simply carries tighter bounds than asked for.
struct PrecisionConfig {
  int working_digits = 34;
  int target_digits = 16;

  PrecisionConfig() = default;
  PrecisionConfig(int working, int target)
      : working_digits(working), target_digits(target) {
    validate();
  }

  void validate() const {
    if (target_digits < 1)
      throw domain_error("PrecisionConfig: target_digits must be >= 1");
    if (working_digits < target_digits + 6)
      throw domain_error(
          "PrecisionConfig: working_digits must be >= target_digits + 6");
    if (working_digits > kMaxWorkingDigits)
      throw domain_error("PrecisionConfig: working_digits above tier limit " +
                         std::to_string(kMaxWorkingDigits));
  }

  // One automatic retry at doubled working precision.
  PrecisionConfig doubled() const {
    PrecisionConfig p;
    p.working_digits = std::min(2 * working_digits, kMaxWorkingDigits);
    p.target_digits = target_digits;
    return p;
  }

  bool needs_hi_tier() const { return working_digits > 50; }
};

template <class R>
inline R euler_gamma() {
  return boost::math::constants::euler<R>();
}

template <class R>
inline R pi_const() {
  return boost::math::constants::pi<R>();
}

template <class R>
inline R machine_eps() {
  return std::numeric_limits<R>::epsilon();
}

// Rounding contribution charged per floating point operation: c * ulp with
// c = 8, applied to a magnitude estimate of the intermediate quantities.
template <class R>
inline R round_bound(const R& magnitude, int op_count) {
  using std::fabs;
  return R(8) * R(op_count) * machine_eps<R>() * fabs(magnitude);
}

}  // namespace kgamma

#endif  // KGAMMA_PRECISION_HPP
