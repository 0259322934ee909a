// Command-line frontend: single-point evaluation, identity checks, claim
// certification, and Cartesian sweeps, with JSON/CSV/text reports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>

#include "kgamma/oracles.hpp"
#include "kgamma/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace kgamma;
using nlohmann::ordered_json;

namespace {

struct CommonOpts {
  int digits = 16;
  std::string out;
  std::string format = "json";
  std::string grid;
  int threads = 0;  // 0: all cores, 1: serial
};

std::vector<double> parse_double_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
  if (out.empty()) throw domain_error("empty list: " + s);
  return out;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  auto dots = s.find("..");
  if (dots != std::string::npos) {
    int a = std::stoi(s.substr(0, dots));
    int b = std::stoi(s.substr(dots + 2));
    if (b < a) throw domain_error("bad range: " + s);
    for (int i = a; i <= b; ++i) out.push_back(i);
    return out;
  }
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  if (out.empty()) throw domain_error("empty list: " + s);
  return out;
}

GridSpec parse_grid(const std::string& s, GridSpec fallback) {
  if (s.empty()) return fallback;
  std::vector<std::string> parts;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4)
    throw domain_error("grid must be min:max:points:log|lin, got " + s);
  GridSpec g = fallback;
  g.x_min = std::stod(parts[0]);
  g.x_max = std::stod(parts[1]);
  g.points = std::stoi(parts[2]);
  if (parts[3] == "log")
    g.spacing = GridSpacing::Log;
  else if (parts[3] == "lin")
    g.spacing = GridSpacing::Linear;
  else
    throw domain_error("grid spacing must be log or lin");
  g.validate();
  return g;
}

PrecisionConfig precision_from(const CommonOpts& c) {
  const int target = c.digits;
  const int working = std::max(34, target + 6);
  return PrecisionConfig(working, target);
}

bool use_parallel(const CommonOpts& c) {
#ifdef _OPENMP
  if (c.threads == 1) return false;
  if (c.threads > 1) omp_set_num_threads(c.threads);
  return true;
#else
  (void)c;
  return false;
#endif
}

void emit(Report& rep, const CommonOpts& c) {
  finalize_report(rep);
  std::string body;
  if (c.format == "json")
    body = report_to_json(rep).dump(2) + "\n";
  else if (c.format == "csv")
    body = report_to_csv(rep);
  else if (c.format == "text")
    body = report_to_text(rep);
  else
    throw domain_error("unknown format: " + c.format);
  if (c.out.empty()) {
    std::cout << body;
  } else {
    std::ofstream f(c.out);
    if (!f) throw domain_error("cannot open output file: " + c.out);
    f << body;
  }
}

// ---------------------------------------------------------------------------
// eval

template <class R>
Eval<R> eval_function(const std::string& fn, Backend backend, double x,
                      double k, int m, int order, const PrecisionConfig& prec,
                      const QuadratureSpec& qspec) {
  const R xr(x), kr(k);
  if (fn == "gammak") {
    if (backend == Backend::Quadrature) return gamma_k_integral(xr, kr, qspec);
    if (backend == Backend::Limit) {
      Eval<R> e;
      e.value = R(gamma_k_limit(x, k, 100000));
      e.abs_error_bound = R(0.01) * (std::fabs(e.value.template convert_to<double>()) + 1);
      e.backend = Backend::Limit;
      e.digits_requested = 2;
      return e;
    }
    return gamma_k(xr, kr, backend, prec);
  }
  if (fn == "lngammak") {
    if (backend == Backend::Quadrature) {
      using std::fabs;
      using std::log;
      Eval<R> g = gamma_k_integral(xr, kr, qspec);
      return make_eval(log(g.value), g.abs_error_bound / fabs(g.value) * 2,
                       Backend::Quadrature, prec);
    }
    return ln_gamma_k(xr, kr, backend, prec);
  }
  if (fn == "digammak") {
    if (backend == Backend::Quadrature) return digamma_k_integral(xr, kr, qspec);
    return digamma_k(xr, kr, backend, prec);
  }
  if (fn == "polygammak") {
    if (order < 1) throw domain_error("polygammak requires --order >= 1");
    if (backend == Backend::Quadrature)
      return polygamma_k_integral(order, xr, kr, qspec);
    return polygamma_k(order, xr, kr, backend, prec);
  }
  KParams p(k, m, std::max(order, 1));
  if (fn == "ratioF") return ratio_F(xr, p, prec, backend);
  if (fn == "ratioG") return ratio_G(xr, p, prec, backend);
  if (fn == "logderivF") {
    if (order < 1) throw domain_error("logderivF requires --order >= 1");
    return log_deriv_F(order, xr, p, prec, backend);
  }
  if (fn == "logderivInvG") {
    if (order < 1) throw domain_error("logderivInvG requires --order >= 1");
    return log_deriv_invG(order, xr, p, prec, backend);
  }
  throw domain_error("unknown eval function: " + fn);
}

int run_eval(const std::string& fn, const std::string& backend_s, double x,
             double k, int m, int order, const CommonOpts& c) {
  const PrecisionConfig prec = precision_from(c);
  const Backend backend = backend_from_name(backend_s);
  QuadratureSpec qspec;
  qspec.abs_tolerance = std::pow(10.0, -(prec.target_digits + 6));

  ordered_json cfg{{"command", "eval"},       {"function", fn},
                   {"x", x},                  {"k", k},
                   {"m", m},                  {"order", order},
                   {"backend", backend_s},    {"digits", c.digits},
                   {"format", c.format}};
  Report rep = make_report(cfg);
  ordered_json inputs{{"x", x}, {"k", k}};
  if (fn == "ratioF" || fn == "ratioG" || fn == "logderivF" ||
      fn == "logderivInvG")
    inputs["m"] = m;
  if (order > 0) inputs["r"] = order;

  if (prec.needs_hi_tier()) {
    auto e = eval_function<Real100>(fn, backend, x, k, m, order, prec, qspec);
    add_eval(rep, fn, inputs, e, prec);
  } else {
    auto e = eval_function<Real50>(fn, backend, x, k, m, order, prec, qspec);
    add_eval(rep, fn, inputs, e, prec);
  }
  emit(rep, c);
  return rep.exit_code;
}

// ---------------------------------------------------------------------------
// identity

template <class R>
void run_identity_typed(Report& rep, const std::string& sel,
                        const std::vector<double>& xs,
                        const std::vector<double>& ks,
                        const std::vector<int>& ms,
                        const std::vector<int>& rs,
                        const std::vector<int>& ns,
                        const std::vector<double>& ts,
                        const PrecisionConfig& prec) {
  QuadratureSpec qspec;
  if (sel == "recurrence") {
    for (double k : ks)
      for (double x : xs)
        add_identity(rep, check_recurrence(R(x), R(k), prec), prec);
  } else if (sel == "gauss-mult") {
    for (double k : ks)
      for (int m : ms)
        for (double x : xs)
          add_identity(rep, check_gauss_multiplication(R(x), R(k), m, prec),
                       prec);
  } else if (sel == "euler-product") {
    for (double k : ks)
      for (int m : ms)
        add_identity(rep, check_euler_product(R(k), m, prec), prec);
  } else if (sel == "polygamma-mult") {
    for (int r : rs)
      for (double k : ks)
        for (int m : ms)
          for (double x : xs)
            add_identity(
                rep, check_polygamma_multiplication(r, R(x), R(k), m, prec),
                prec);
  } else if (sel == "digamma-mult") {
    for (double k : ks)
      for (int m : ms)
        for (double x : xs)
          add_identity(rep, check_digamma_multiplication(R(x), R(k), m, prec),
                       prec);
  } else if (sel == "lemma3") {
    for (int n : ns)
      for (double t : ts)
        add_identity(rep, check_lemma3(n, R(t), prec), prec);
  } else if (sel == "power-kernel") {
    for (int r : rs)
      for (double x : xs) {
        IdentityOutcome<R> o;
        o.identity_id = "power-kernel";
        o.x = x;
        o.r = r;
        o.lhs = power_kernel_integral(r, R(x), qspec);
        R rfact = 1;
        for (int i = 2; i <= r; ++i) rfact *= i;
        using std::pow;
        const R exact = rfact / pow(R(x), R(r + 1));
        o.rhs = make_eval(exact, round_bound<R>(exact, 2 * r + 4),
                          Backend::Series, prec);
        o.residual = o.lhs.value - o.rhs.value;
        o.threshold = R(kIdentitySafetyFactor) *
                      (o.lhs.abs_error_bound + o.rhs.abs_error_bound);
        o.pass = fabs(o.residual) <= o.threshold;
        add_identity(rep, o, prec);
      }
  } else {
    throw domain_error("unknown identity: " + sel);
  }
}

int run_identity(const std::string& sel, std::optional<double> x,
                 std::optional<double> t, const std::string& k_s,
                 const std::string& m_s, const std::string& r_s,
                 const std::string& n_s, const CommonOpts& c) {
  const PrecisionConfig prec = precision_from(c);
  const GridSpec def = default_identity_grid();
  GridSpec g = parse_grid(c.grid, def);
  std::vector<double> xs = x ? std::vector<double>{*x} : grid_points(g);
  std::vector<double> ks = k_s.empty() ? def.k_list : parse_double_list(k_s);
  std::vector<int> ms = m_s.empty() ? def.m_list : parse_int_list(m_s);
  std::vector<int> rs = r_s.empty()
                            ? (sel == "power-kernel"
                                   ? std::vector<int>{0, 1, 2, 3, 4, 5, 6}
                                   : def.r_list)
                            : parse_int_list(r_s);
  std::vector<int> ns =
      n_s.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}
                  : parse_int_list(n_s);
  std::vector<double> ts =
      t ? std::vector<double>{*t}
        : grid_points(parse_grid(c.grid, default_lemma3_grid()));
  if (sel == "power-kernel" && !x)
    xs = {0.5, 1, 2, 10};

  ordered_json cfg{{"command", "identity"}, {"identity", sel},
                   {"k", ks},               {"m", ms},
                   {"r", rs},               {"digits", c.digits},
                   {"format", c.format}};
  if (x) cfg["x"] = *x;
  if (t) cfg["t"] = *t;
  if (sel == "lemma3") cfg["n"] = ns;
  Report rep = make_report(cfg);
  if (prec.needs_hi_tier())
    run_identity_typed<Real100>(rep, sel, xs, ks, ms, rs, ns, ts, prec);
  else
    run_identity_typed<Real50>(rep, sel, xs, ks, ms, rs, ns, ts, prec);
  emit(rep, c);
  return rep.exit_code;
}

// ---------------------------------------------------------------------------
// certify / sweep

void certify_one(Report& rep, ClaimId claim, double k, int m, int rmax,
                 bool include_r0, const std::vector<int>& ns,
                 const GridSpec& grid, const PrecisionConfig& prec,
                 bool parallel) {
  const ClaimInfo& info = claim_info(claim);
  if (claim == ClaimId::LEMMA3) {
    GridSpec tg = grid;
    for (const auto& cert : certify_lemma3(ns, tg, prec, parallel))
      add_certificate(rep, cert);
    return;
  }
  KParams p(k, m, 1);
  if (info.needs_r) {
    for (const auto& cert : certify_sign_pattern(claim, p, rmax, grid, prec,
                                                 parallel, include_r0))
      add_certificate(rep, cert);
    return;
  }
  add_certificate(rep, certify_claim(claim, p, grid, prec, parallel));
}

int run_certify(const std::string& claim_s, const std::string& k_s,
                const std::string& m_s, int rmax, bool include_r0,
                const std::string& n_s, const CommonOpts& c, bool is_sweep) {
  const PrecisionConfig prec = precision_from(c);
  const GridSpec def = default_certify_grid();
  GridSpec grid = parse_grid(c.grid, def);
  const bool parallel = use_parallel(c);

  std::vector<std::string> claims;
  {
    std::stringstream ss(claim_s);
    std::string item;
    while (std::getline(ss, item, ',')) claims.push_back(item);
  }
  if (claims.empty()) throw domain_error("no claims given");

  std::vector<double> ks = k_s.empty()
                               ? (is_sweep ? def.k_list
                                           : std::vector<double>{1.0})
                               : parse_double_list(k_s);
  std::vector<int> ms = m_s.empty()
                            ? (is_sweep ? def.m_list : std::vector<int>{2})
                            : parse_int_list(m_s);
  std::vector<int> ns = n_s.empty() ? std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8}
                                    : parse_int_list(n_s);

  ordered_json cfg{{"command", is_sweep ? "sweep" : "certify"},
                   {"claims", claims},
                   {"k", ks},
                   {"m", ms},
                   {"rmax", rmax},
                   {"grid",
                    {{"x_min", grid.x_min},
                     {"x_max", grid.x_max},
                     {"points", grid.points},
                     {"spacing",
                      grid.spacing == GridSpacing::Log ? "log" : "lin"}}},
                   {"digits", c.digits},
                   {"format", c.format}};
  Report rep = make_report(cfg);

  for (const auto& name : claims) {
    ClaimId claim = claim_from_name(name);
    if (claim == ClaimId::LEMMA3) {
      GridSpec tg = parse_grid(c.grid, default_lemma3_grid());
      certify_one(rep, claim, 1, 2, rmax, include_r0, ns, tg, prec, parallel);
      continue;
    }
    for (double k : ks)
      for (int m : ms)
        certify_one(rep, claim, k, m, rmax, include_r0, ns, grid, prec,
                    parallel);
  }
  emit(rep, c);
  return rep.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"k-gamma function evaluator and inequality certifier"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string backend = "reduction";
  std::string fn, identity_sel, claims;
  double x = 1, k = 1;
  std::optional<double> x_opt, t_opt;
  int m = 2, order = 0, rmax = 6;
  bool include_r0 = false;
  std::string k_list, m_list, r_list, n_list;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--digits", common.digits, "target significant digits")
        ->check(CLI::Range(6, 90));
    sub->add_option("--out", common.out, "output path (default stdout)");
    sub->add_option("--format", common.format, "json|csv|text")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--grid", common.grid, "min:max:points:log|lin");
    sub->add_option("--threads", common.threads,
                    "worker threads (1 = serial)");
  };

  auto* eval_cmd = app.add_subcommand("eval", "evaluate one function");
  eval_cmd->add_option("function", fn,
                       "gammak|lngammak|digammak|polygammak|ratioF|ratioG|"
                       "logderivF|logderivInvG")
      ->required();
  eval_cmd->add_option("--x", x, "argument")->required();
  eval_cmd->add_option("--k", k, "scale parameter");
  eval_cmd->add_option("--m", m, "multiplication order");
  eval_cmd->add_option("--order", order, "derivative order r");
  eval_cmd->add_option("--backend", backend, "reduction|series|quadrature|limit");
  add_common(eval_cmd);

  auto* id_cmd = app.add_subcommand("identity", "check an identity on a grid");
  id_cmd->add_option("name", identity_sel,
                     "recurrence|gauss-mult|euler-product|polygamma-mult|"
                     "digamma-mult|lemma3|power-kernel")
      ->required();
  id_cmd->add_option("--x", x_opt, "single x instead of the grid");
  id_cmd->add_option("--t", t_opt, "single t (lemma3)");
  id_cmd->add_option("--k", k_list, "comma list of k values");
  id_cmd->add_option("--m", m_list, "comma list of m values");
  id_cmd->add_option("--order", r_list, "comma list / a..b of orders");
  id_cmd->add_option("--n", n_list, "comma list / a..b of n (lemma3)");
  add_common(id_cmd);

  auto* cert_cmd = app.add_subcommand("certify", "certify a claim over a grid");
  cert_cmd->add_option("claim", claims,
                       "thm1a|thm1b|cor1-lower|cor1-upper|cor1-reversed|"
                       "cor1-rev-lower|cor1-rev-upper|cor2|cor3-lower|"
                       "cor3-upper|cor3|lemma3")
      ->required();
  cert_cmd->add_option("--k", k_list, "comma list of k values");
  cert_cmd->add_option("--m", m_list, "comma list of m values");
  cert_cmd->add_option("--rmax", rmax, "max derivative order for sign claims");
  cert_cmd->add_flag("--include-r0", include_r0,
                     "also check the r=0 (log-positivity) condition");
  cert_cmd->add_option("--n", n_list, "comma list / a..b of n (lemma3)");
  add_common(cert_cmd);

  auto* sweep_cmd =
      app.add_subcommand("sweep", "certify claims over a Cartesian sweep");
  sweep_cmd->add_option("--claims", claims, "comma list of claims")->required();
  sweep_cmd->add_option("--k", k_list, "comma list of k values");
  sweep_cmd->add_option("--m", m_list, "comma list of m values");
  sweep_cmd->add_option("--rmax", rmax, "max derivative order");
  sweep_cmd->add_flag("--include-r0", include_r0,
                      "also check the r=0 condition");
  sweep_cmd->add_option("--n", n_list, "comma list / a..b of n (lemma3)");
  add_common(sweep_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(fn, backend, x, k, m, order, common);
    if (*id_cmd)
      return run_identity(identity_sel, x_opt, t_opt, k_list, m_list, r_list,
                          n_list, common);
    if (*cert_cmd) {
      // "cor3" certifies both bounds
      std::string cs = (claims == "cor3") ? "cor3-lower,cor3-upper" : claims;
      return run_certify(cs, k_list, m_list, rmax, include_r0, n_list, common,
                         false);
    }
    if (*sweep_cmd) {
      std::string cs = claims;
      auto pos = cs.find("cor3");
      if (pos != std::string::npos && cs.substr(pos, 5) != "cor3-")
        cs.replace(pos, 4, "cor3-lower,cor3-upper");
      return run_certify(cs, k_list, m_list, rmax, include_r0, n_list, common,
                         true);
    }
  } catch (const domain_error& e) {
    ordered_json err{{"error", e.what()}, {"exit_code", kExitUsage}};
    std::cerr << err.dump(2) << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    ordered_json err{{"error", e.what()}, {"exit_code", kExitUsage}};
    std::cerr << err.dump(2) << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
