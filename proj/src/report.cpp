#include "kgamma/report.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace kgamma {

namespace {

std::string iso_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string csv_field(const nlohmann::ordered_json& j, const char* key) {
  if (!j.contains(key)) return "";
  const auto& v = j.at(key);
  if (v.is_string()) return v.get<std::string>();
  std::ostringstream os;
  os << v;
  return os.str();
}

}  // namespace

Report make_report(nlohmann::ordered_json config) {
  Report r;
  r.timestamp = iso_timestamp();
  r.config = std::move(config);
  return r;
}

void finalize_report(Report& r) {
  if (r.summary.fail > 0)
    r.exit_code = kExitFail;
  else if (r.summary.indeterminate > 0)
    r.exit_code = kExitIndeterminate;
  else
    r.exit_code = kExitPass;
}

void add_certificate(Report& r, const Certificate& c) {
  nlohmann::ordered_json j;
  j["type"] = "certificate";
  j["id"] = claim_name(c.claim);
  j["k"] = c.k;
  j["m"] = c.m;
  if (claim_info(c.claim).needs_r) j["r"] = c.r;
  if (c.n > 0) j["n"] = c.n;
  j["grid"] = {{"x_min", c.grid.x_min},
               {"x_max", c.grid.x_max},
               {"points", c.grid.points},
               {"spacing", c.grid.spacing == GridSpacing::Log ? "log" : "lin"}};
  j["verdict"] = verdict_name(c.verdict);
  j["stats"] = {{"pass", c.stats.pass},
                {"fail", c.stats.fail},
                {"indeterminate", c.stats.indeterminate},
                {"retried", c.stats.retried}};
  nlohmann::ordered_json ws = nlohmann::ordered_json::array();
  for (const auto& w : c.witnesses) {
    ws.push_back({{"x", w.x},
                  {"value", w.value},
                  {"bound", w.bound},
                  {"margin", w.margin}});
  }
  j["witnesses"] = std::move(ws);
  r.results.push_back(std::move(j));
  switch (c.verdict) {
    case Verdict::Pass: r.summary.pass++; break;
    case Verdict::Fail: r.summary.fail++; break;
    case Verdict::Indeterminate: r.summary.indeterminate++; break;
  }
}

nlohmann::ordered_json report_to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["version"] = r.version;
  j["timestamp"] = r.timestamp;
  j["config"] = r.config;
  j["results"] = r.results;
  j["summary"] = {{"pass", r.summary.pass},
                  {"fail", r.summary.fail},
                  {"indeterminate", r.summary.indeterminate}};
  j["exit_code"] = r.exit_code;
  return j;
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  os << "type,id,x,k,t,m,r,n,verdict,value,bound,residual,threshold,margin\n";
  auto row = [&](std::initializer_list<std::string> fields) {
    bool first = true;
    for (const auto& f : fields) {
      if (!first) os << ',';
      os << f;
      first = false;
    }
    os << '\n';
  };
  for (const auto& j : r.results) {
    const std::string type = j.at("type");
    if (type == "identity") {
      const auto& in = j.at("inputs");
      row({type, csv_field(j, "id"), csv_field(in, "x"), csv_field(in, "k"),
           csv_field(in, "t"), csv_field(in, "m"), csv_field(in, "r"),
           csv_field(in, "n"), j.at("pass").get<bool>() ? "PASS" : "FAIL",
           csv_field(j, "lhs"), "", csv_field(j, "residual"),
           csv_field(j, "threshold"), ""});
    } else if (type == "certificate") {
      row({type, csv_field(j, "id"), "", csv_field(j, "k"), "",
           csv_field(j, "m"), csv_field(j, "r"), csv_field(j, "n"),
           csv_field(j, "verdict"), "", "", "", "", ""});
      for (const auto& w : j.at("witnesses")) {
        row({"witness", csv_field(j, "id"), csv_field(w, "x"),
             csv_field(j, "k"), "", csv_field(j, "m"), csv_field(j, "r"),
             csv_field(j, "n"), "", csv_field(w, "value"),
             csv_field(w, "bound"), "", "", csv_field(w, "margin")});
      }
    } else if (type == "eval") {
      const auto& in = j.at("inputs");
      row({type, csv_field(j, "id"), csv_field(in, "x"), csv_field(in, "k"),
           csv_field(in, "t"), csv_field(in, "m"), csv_field(in, "r"),
           csv_field(in, "n"), "", csv_field(j, "value"),
           csv_field(j, "abs_error_bound"), "", "", ""});
    }
  }
  os << "summary,,,,,,,,," << r.summary.pass << ',' << r.summary.fail << ','
     << r.summary.indeterminate << ",," << r.exit_code << '\n';
  return os.str();
}

std::string report_to_text(const Report& r) {
  std::ostringstream os;
  os << "kgamma " << r.version << "  (" << r.timestamp << ")\n";
  for (const auto& j : r.results) {
    const std::string type = j.at("type");
    if (type == "identity") {
      os << "  identity " << j.at("id").get<std::string>() << ' '
         << j.at("inputs").dump() << "  residual="
         << j.at("residual").get<std::string>() << "  "
         << (j.at("pass").get<bool>() ? "PASS" : "FAIL") << '\n';
    } else if (type == "certificate") {
      os << "  certify " << j.at("id").get<std::string>() << " k="
         << j.at("k") << " m=" << j.at("m");
      if (j.contains("r")) os << " r=" << j.at("r");
      if (j.contains("n")) os << " n=" << j.at("n");
      os << "  " << j.at("verdict").get<std::string>() << "  (pass/fail/indet "
         << j.at("stats").at("pass") << '/' << j.at("stats").at("fail") << '/'
         << j.at("stats").at("indeterminate") << ')' << '\n';
      for (const auto& w : j.at("witnesses"))
        os << "    witness x=" << w.at("x") << " value="
           << w.at("value").get<std::string>() << " bound="
           << w.at("bound").get<std::string>() << '\n';
    } else if (type == "eval") {
      os << "  eval " << j.at("id").get<std::string>() << ' '
         << j.at("inputs").dump() << " = " << j.at("value").get<std::string>()
         << "  (+/- " << j.at("abs_error_bound").get<std::string>() << ", "
         << j.at("backend").get<std::string>() << ")\n";
    }
  }
  os << "summary: pass " << r.summary.pass << ", fail " << r.summary.fail
     << ", indeterminate " << r.summary.indeterminate << " -> exit "
     << r.exit_code << '\n';
  return os.str();
}

}  // namespace kgamma
