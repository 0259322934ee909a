#ifndef KGAMMA_CLAIMS_HPP
#define KGAMMA_CLAIMS_HPP

#include <string>
#include <vector>

#include "kgamma/precision.hpp"

namespace kgamma {

// Checkable statements.  COR1_REVERSED is the combined reversed chain on
// (0,k); its two sides are also certifiable individually since only the
// lower side actually reverses in practice.
enum class ClaimId {
  THM1A_LCM_F,
  THM1B_LCM_INVG,
  COR1_LOWER,
  COR1_UPPER,
  COR1_REVERSED,
  COR1_REV_LOWER,
  COR1_REV_UPPER,
  COR2,
  COR3_LOWER,
  COR3_UPPER,
  LEMMA3,
};

enum class ClaimDomain {
  AllPositive,   // x in (0, inf)
  XAboveK,       // x in (k, inf)
  XBelowK,       // x in (0, k)
  TGrid,         // lemma-3 style (n, t) sweep
};

struct ClaimInfo {
  ClaimId id;
  const char* cli_name;
  ClaimDomain domain;
  bool needs_r;  // sign-pattern claims sweep the derivative order
  const char* statement;
};

const std::vector<ClaimInfo>& claim_registry();
const ClaimInfo& claim_info(ClaimId id);
ClaimId claim_from_name(const std::string& cli_name);
const char* claim_name(ClaimId id);

enum class Verdict { Pass, Fail, Indeterminate };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Indeterminate: return "INDETERMINATE";
  }
  return "?";
}

}  // namespace kgamma

#endif  // KGAMMA_CLAIMS_HPP
