#ifndef KGAMMA_REPORT_HPP
#define KGAMMA_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "kgamma/certifier.hpp"
#include "kgamma/identities.hpp"

// Report assembly and serialization.  JSON and CSV are the contract
// surfaces; both carry numeric values as decimal strings at target
// precision so the content is identical across formats and portable
// across arithmetic implementations.  Text output is human-oriented.

namespace kgamma {

inline constexpr const char* kToolVersion = "1.0.0";

struct Summary {
  long pass = 0, fail = 0, indeterminate = 0;
};

struct Report {
  std::string version = kToolVersion;
  std::string timestamp;
  nlohmann::ordered_json config;
  std::vector<nlohmann::ordered_json> results;
  Summary summary;
  int exit_code = 0;
};

// exit codes: 0 all-pass, 1 any-fail, 2 indeterminate-only, 3 usage error
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitIndeterminate = 2;
inline constexpr int kExitUsage = 3;

Report make_report(nlohmann::ordered_json config);
void finalize_report(Report& r);
nlohmann::ordered_json report_to_json(const Report& r);
std::string report_to_csv(const Report& r);
std::string report_to_text(const Report& r);

void add_certificate(Report& r, const Certificate& c);

template <class R>
void add_identity(Report& r, const IdentityOutcome<R>& o,
                  const PrecisionConfig& prec) {
  nlohmann::ordered_json j;
  j["type"] = "identity";
  j["id"] = o.identity_id;
  nlohmann::ordered_json in;
  if (o.x != 0) in["x"] = o.x;
  if (o.k != 0) in["k"] = o.k;
  if (o.t != 0) in["t"] = o.t;
  if (o.m != 0) in["m"] = o.m;
  if (o.r != 0) in["r"] = o.r;
  if (o.n != 0) in["n"] = o.n;
  j["inputs"] = in;
  const int d = prec.target_digits;
  j["lhs"] = detail::decimal_string(o.lhs.value, d);
  j["rhs"] = detail::decimal_string(o.rhs.value, d);
  j["residual"] = detail::decimal_string(o.residual, d);
  j["threshold"] = detail::decimal_string(o.threshold, 3);
  j["pass"] = o.pass;
  r.results.push_back(std::move(j));
  (o.pass ? r.summary.pass : r.summary.fail)++;
}

template <class R>
void add_eval(Report& r, const std::string& function,
              nlohmann::ordered_json inputs, const Eval<R>& e,
              const PrecisionConfig& prec) {
  nlohmann::ordered_json j;
  j["type"] = "eval";
  j["id"] = function;
  j["inputs"] = std::move(inputs);
  j["value"] = detail::decimal_string(e.value, prec.target_digits);
  j["abs_error_bound"] = detail::decimal_string(e.abs_error_bound, 3);
  j["backend"] = backend_name(e.backend);
  j["digits"] = e.digits_requested;
  r.results.push_back(std::move(j));
  r.summary.pass++;  // plain evaluations carry no verdict
}

}  // namespace kgamma

#endif  // KGAMMA_REPORT_HPP
