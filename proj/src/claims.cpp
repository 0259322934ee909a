#include "kgamma/claims.hpp"

namespace kgamma {

const std::vector<ClaimInfo>& claim_registry() {
  static const std::vector<ClaimInfo> reg = {
      {ClaimId::THM1A_LCM_F, "thm1a", ClaimDomain::AllPositive, true,
       "F(x) = Gamma_k(mx)/(x^(m-1) Gamma_k^m(x)) is strictly "
       "logarithmically completely monotonic on (0,inf)"},
      {ClaimId::THM1B_LCM_INVG, "thm1b", ClaimDomain::AllPositive, true,
       "1/G(x) = Gamma_k^m(x)/Gamma_k(mx) is strictly logarithmically "
       "completely monotonic on (0,inf)"},
      {ClaimId::COR1_LOWER, "cor1-lower", ClaimDomain::XAboveK, false,
       "k^(m-1)(m-1)! < Gamma_k(mx)/Gamma_k^m(x) for x in (k,inf)"},
      {ClaimId::COR1_UPPER, "cor1-upper", ClaimDomain::XAboveK, false,
       "Gamma_k(mx)/Gamma_k^m(x) < x^(m-1)(m-1)! for x in (k,inf)"},
      {ClaimId::COR1_REVERSED, "cor1-reversed", ClaimDomain::XBelowK, false,
       "both bounds of cor1 reverse for x in (0,k)"},
      {ClaimId::COR1_REV_LOWER, "cor1-rev-lower", ClaimDomain::XBelowK, false,
       "Gamma_k(mx)/Gamma_k^m(x) < k^(m-1)(m-1)! for x in (0,k)"},
      {ClaimId::COR1_REV_UPPER, "cor1-rev-upper", ClaimDomain::XBelowK, false,
       "x^(m-1)(m-1)! < Gamma_k(mx)/Gamma_k^m(x) for x in (0,k)"},
      {ClaimId::COR2, "cor2", ClaimDomain::AllPositive, false,
       "Gamma_k(mx)/Gamma_k^m(x) < x^(m-1)/m for x in (0,inf)"},
      {ClaimId::COR3_LOWER, "cor3-lower", ClaimDomain::AllPositive, false,
       "avg_s psi_k'(x+sk/m) < psi_k'(x) for x in (0,inf)"},
      {ClaimId::COR3_UPPER, "cor3-upper", ClaimDomain::AllPositive, false,
       "psi_k'(x) < avg_s psi_k'(x+sk/m) + (m-1)/(m x^2) for x in (0,inf)"},
      {ClaimId::LEMMA3, "lemma3", ClaimDomain::TGrid, false,
       "sum_{s=1..n} e^(-st/(n+1)) > n e^(-t) for t > 0"},
  };
  return reg;
}

const ClaimInfo& claim_info(ClaimId id) {
  for (const auto& c : claim_registry())
    if (c.id == id) return c;
  throw domain_error("claim_info: unknown claim id");
}

ClaimId claim_from_name(const std::string& cli_name) {
  for (const auto& c : claim_registry())
    if (cli_name == c.cli_name) return c.id;
  throw domain_error("unknown claim: " + cli_name);
}

const char* claim_name(ClaimId id) { return claim_info(id).cli_name; }

}  // namespace kgamma
