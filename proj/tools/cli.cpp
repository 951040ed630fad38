#include "gexp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "gexp/constructor.hpp"
#include "gexp/errors.hpp"
#include "gexp/exterior_oracle.hpp"
#include "gexp/genexp.hpp"
#include "gexp/gpartitions.hpp"
#include "gexp/orders.hpp"
#include "gexp/recurrence.hpp"
#include "gexp/weyl_oracle.hpp"
#include "json.hpp"

namespace gexp {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string family = "B";
  int rank = 2;
  std::string format = "json";
  std::string output;
  std::optional<std::int64_t> cap;
  bool accept_cost = false;
  bool oracle = false;
  bool case_c = false;
  bool inject_fault = false;
  std::string lambda, mu, bound, filter = "dominance", module = "adjoint";
  int k = 0;  // 0: every index
};

struct Result {
  json report;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  bool ok = true;
};

// Default rank caps per command; --cap replaces them.
int default_rank_cap(const RunConfig& cfg) {
  if (cfg.command == "kostant-verify") return cfg.oracle ? 4 : 8;
  if (cfg.command == "lr" || cfg.command == "short-kostant-verify") return 4;
  if (cfg.command == "recurrence-verify") return 6;
  if (cfg.command == "genexp") return 9;
  return 12;
}

std::vector<int> parse_coeffs(const std::string& s, int rank, const char* what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw ConfigError(std::string("--") + what + ": cannot parse '" + item + "'");
    }
  }
  if (static_cast<int>(out.size()) != rank)
    throw ConfigError(std::string("--") + what + " needs " + std::to_string(rank) + " fundamental coefficients");
  for (int c : out)
    if (c < 0) throw ConfigError(std::string("--") + what + " must be dominant");
  return out;
}

json wj(const RootDatum& d, const Weight& w) { return {{"c2", w.c2}, {"label", d.fundamental_label(w)}}; }

std::string c2_field(const Weight& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::to_string(w[i]);
  return s;
}

json poly_json(const PolyT& p) { return p.is_zero() ? json::array() : json(p.dense()); }

std::string poly_field(const std::optional<PolyT>& p) {
  if (!p) return "";
  std::string s;
  if (p->is_zero()) return "0";
  auto v = p->dense();
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string b(bool v) { return v ? "true" : "false"; }

// lusztig_E with optional spill to GEXP_CACHE_DIR.
PolyT cached_lusztig(const RootDatum& d, const Weight& lam, const OracleCaps& caps) {
  const char* dir = std::getenv("GEXP_CACHE_DIR");
  if (!dir || !*dir) return lusztig_E(d, lam, caps);
  std::string key = "E_" + d.name();
  for (int c : lam.c2) key += "_" + (c < 0 ? "m" + std::to_string(-c) : std::to_string(c));
  const std::filesystem::path path = std::filesystem::path(dir) / (key + ".txt");
  if (std::ifstream in{path}) {
    PolyT p;
    int e = 0;
    std::int64_t c = 0;
    while (in >> e >> c) p.add_term(e, c);
    return p;
  }
  PolyT p = lusztig_E(d, lam, caps);
  std::filesystem::create_directories(dir);
  std::ofstream outf(path);
  for (const auto& [e, c] : p.terms()) outf << e << ' ' << c << '\n';
  return p;
}

Result cmd_roots(const RootDatum& d) {
  Result r;
  r.header = {"kind", "c2", "label"};
  json pos = json::array(), simple = json::array(), fund = json::array();
  for (const Weight& a : d.simple_roots) {
    simple.push_back(wj(d, a));
    r.rows.push_back({"simple_root", c2_field(a), d.fundamental_label(a)});
  }
  for (const Weight& a : d.positive_roots) {
    pos.push_back(wj(d, a));
    r.rows.push_back({"positive_root", c2_field(a), d.fundamental_label(a)});
  }
  for (const Weight& w : d.fundamental_weights) {
    fund.push_back(wj(d, w));
    r.rows.push_back({"fundamental_weight", c2_field(w), d.fundamental_label(w)});
  }
  r.rows.push_back({"rho", c2_field(d.rho), d.fundamental_label(d.rho)});
  r.rows.push_back({"theta", c2_field(d.theta), d.fundamental_label(d.theta)});
  r.report = {{"simple_roots", simple},
              {"positive_roots", pos},
              {"fundamental_weights", fund},
              {"rho", wj(d, d.rho)},
              {"rho_short", wj(d, d.rho_short)},
              {"theta", wj(d, d.theta)},
              {"theta_short", d.theta_short ? wj(d, *d.theta_short) : json(nullptr)},
              {"exponents", d.exponents},
              {"coxeter_number", d.coxeter_number},
              {"weyl_group_order", d.weyl_group_order()}};
  return r;
}

Result cmd_orders(const RootDatum& d, const RunConfig& cfg) {
  Result r;
  if (!cfg.mu.empty() || !cfg.lambda.empty()) {
    if (cfg.mu.empty() || cfg.lambda.empty()) throw ConfigError("orders: give both --mu and --lambda, or neither");
    const Weight mu = weight_from_fundamental(d, parse_coeffs(cfg.mu, d.rank, "mu"));
    const Weight lam = weight_from_fundamental(d, parse_coeffs(cfg.lambda, d.rank, "lambda"));
    const OrderReport o = compare_weights(d, mu, lam);
    r.header = {"mu", "lambda", "dominance_leq", "coordinatewise_leq"};
    r.rows.push_back({c2_field(mu), c2_field(lam), b(o.dominance_leq), b(o.coordinatewise_leq)});
    r.report = {{"mu", wj(d, mu)},
                {"lambda", wj(d, lam)},
                {"dominance_leq", o.dominance_leq},
                {"coordinatewise_leq", o.coordinatewise_leq},
                {"partial_sums2", o.partial_sums2},
                {"parity_ok", o.parity_ok}};
    return r;
  }
  const Weight bound =
      cfg.bound.empty() ? 2 * d.rho : weight_from_fundamental(d, parse_coeffs(cfg.bound, d.rank, "bound"));
  BelowFilter f = BelowFilter::dominance;
  if (cfg.filter == "coordinatewise")
    f = BelowFilter::dominance_and_coordinatewise;
  else if (cfg.filter == "small")
    f = BelowFilter::small;
  else if (cfg.filter != "dominance")
    throw ConfigError("--filter must be dominance, coordinatewise or small");
  r.header = {"c2", "label", "coordinatewise", "small"};
  json ws = json::array();
  for (const Weight& w : enumerate_dominant_below(d, bound, f)) {
    const bool cw = coordinatewise_leq(w, bound), sm = is_small(d, w);
    ws.push_back({{"weight", wj(d, w)}, {"coordinatewise", cw}, {"small", sm}});
    r.rows.push_back({c2_field(w), d.fundamental_label(w), b(cw), b(sm)});
  }
  r.report = {{"bound", wj(d, bound)}, {"filter", cfg.filter}, {"count", ws.size()}, {"weights", ws}};
  return r;
}

Result cmd_lr(const RootDatum& d, const RunConfig& cfg, const OracleCaps& caps) {
  if (cfg.lambda.empty() || cfg.mu.empty()) throw ConfigError("lr needs --lambda and --mu");
  const Weight lam = weight_from_fundamental(d, parse_coeffs(cfg.lambda, d.rank, "lambda"));
  const Weight mu = weight_from_fundamental(d, parse_coeffs(cfg.mu, d.rank, "mu"));
  const Decomposition dec = klimyk_tensor(d, lam, mu, caps);
  const bool partitions = d.family == Family::B || d.family == Family::C || d.family == Family::D;
  std::set<Weight> nus;
  for (const auto& [nu, m] : dec) nus.insert(nu);
  if (partitions)
    for (const Weight& nu : enumerate_dominant_below(d, lam + mu)) nus.insert(nu);
  Result r;
  r.header = {"nu_c2", "nu_label", "klimyk", "count_lr", "agree"};
  json comps = json::array();
  for (const Weight& nu : nus) {
    auto it = dec.find(nu);
    const std::int64_t k = it == dec.end() ? 0 : it->second;
    std::optional<std::int64_t> c;
    if (partitions) c = count_lr(d, lam, mu, nu).count;
    if (k == 0 && (!c || *c == 0)) continue;
    const bool agree = !c || *c == k;
    r.ok = r.ok && agree;
    comps.push_back({{"nu", wj(d, nu)}, {"klimyk", k}, {"count_lr", c ? json(*c) : json(nullptr)}, {"agree", agree}});
    r.rows.push_back({c2_field(nu), d.fundamental_label(nu), std::to_string(k), c ? std::to_string(*c) : "", b(agree)});
  }
  r.report = {{"lambda", wj(d, lam)}, {"mu", wj(d, mu)}, {"components", comps}, {"num_components", comps.size()}};
  return r;
}

Result cmd_kostant(const RootDatum& d, const RunConfig& cfg, const OracleCaps& caps) {
  CertifyOptions opts;
  opts.oracle = cfg.oracle;
  opts.prefer_case_c = cfg.case_c;
  opts.rank_bound = d.rank;
  opts.caps = caps;
  const CertifyReport rep = certify_theorem(d, opts);
  Result r;
  r.header = {"lambda_c2", "lambda_label", "case", "partition", "associated_ok", "admissible_ok"};
  json certs = json::array(), fails = json::array();
  for (const Certificate& c : rep.certificates) {
    certs.push_back({{"lambda", wj(d, c.lambda)},
                     {"case", case_name(c.case_used)},
                     {"partition", c.partition.flat},
                     {"associated_ok", c.associated_ok},
                     {"admissible_ok", c.admissible_ok}});
    std::string flat;
    for (std::size_t i = 0; i < c.partition.flat.size(); ++i)
      flat += (i ? " " : "") + std::to_string(c.partition.flat[i]);
    r.rows.push_back({c2_field(c.lambda), d.fundamental_label(c.lambda), case_name(c.case_used), flat,
                      b(c.associated_ok), b(c.admissible_ok)});
  }
  for (const CertifyFailure& f : rep.failures) fails.push_back({{"lambda", wj(d, f.lambda)}, {"stage", f.stage}});
  r.report = {{"certificates", certs},
              {"certified", rep.passed},
              {"candidates", rep.total},
              {"failures", fails},
              {"case_c_preferred", cfg.case_c}};
  r.ok = rep.failures.empty();
  if (rep.oracle_run) {
    // the converse direction: nothing outside the dominance interval occurs
    const Decomposition dec = klimyk_tensor(d, d.rho, d.rho, caps);
    json extra = json::array();
    for (const auto& [nu, m] : dec)
      if (m > 0 && !dominance_leq(d, nu, 2 * d.rho)) extra.push_back(wj(d, nu));
    r.ok = r.ok && extra.empty() && rep.oracle_confirmed == rep.oracle_total;
    r.report["oracle"] = {{"weights_below_2rho", rep.oracle_total},
                          {"confirmed", rep.oracle_confirmed},
                          {"components_outside", extra},
                          {"num_components", dec.size()}};
  }
  return r;
}

Result cmd_short_kostant(const RootDatum& d, const OracleCaps& caps, const ExteriorCaps& ecaps) {
  if (!(d.family == Family::B || d.family == Family::C || d.family == Family::G2))
    throw ConfigError("short-kostant-verify supports B, C and G2");
  const Weight bound = 2 * d.rho_short;
  const Decomposition dec = klimyk_tensor(d, d.rho_short, d.rho_short, caps);
  const std::vector<Weight> below = enumerate_dominant_below(d, bound);
  std::set<Weight> nus(below.begin(), below.end());
  for (const auto& [nu, m] : dec) nus.insert(nu);
  Result r;
  r.header = {"nu_c2", "nu_label", "below_2rho_s", "multiplicity", "agree"};
  json rows = json::array();
  const std::set<Weight> below_set(below.begin(), below.end());
  for (const Weight& nu : nus) {
    auto it = dec.find(nu);
    const std::int64_t m = it == dec.end() ? 0 : it->second;
    const bool in = below_set.count(nu) > 0;
    const bool agree = in == (m > 0);
    r.ok = r.ok && agree;
    rows.push_back({{"nu", wj(d, nu)}, {"below_2rho_s", in}, {"multiplicity", m}, {"agree", agree}});
    r.rows.push_back({c2_field(nu), d.fundamental_label(nu), b(in), std::to_string(m), b(agree)});
  }
  r.report = {{"kind", d.family == Family::C ? "conjecture-check" : "theorem-check"},
              {"rho_short", wj(d, d.rho_short)},
              {"weights", rows},
              {"iff_holds", r.ok}};
  if (d.family == Family::B && 2 * d.rank + 1 <= ecaps.max_dim) {
    const ExteriorReport ext = verify_exterior_little_adjoint(d, ecaps);
    bool totals = false;
    for (const auto& c : ext.checks)
      if (c.name.rfind("totals", 0) == 0) totals = c.pass;
    r.report["exterior_totals_scale"] = totals;
    r.ok = r.ok && totals;
  }
  return r;
}

Result cmd_genexp(const RootDatum& d, const RunConfig& cfg, const OracleCaps& caps) {
  struct Row {
    Weight lambda;
    int index;
    std::optional<PolyT> closed, recur, oracle;
  };
  std::vector<Row> rows;
  const bool bcd = d.family == Family::B || d.family == Family::C || d.family == Family::D;
  if (bcd) {
    const auto rec = recur_E(d);
    for (const CoveredWeight& cw : covered_weights(d)) {
      Row row{cw.weight, cw.index, closed_E(d, cw.weight), std::nullopt, std::nullopt};
      if (auto it = rec.find(cw.weight); it != rec.end()) row.recur = it->second;
      rows.push_back(row);
    }
  } else {
    rows.push_back({d.theta, 1, base_E_theta(d), std::nullopt, std::nullopt});
    if (d.theta_short) rows.push_back({*d.theta_short, 1, base_E_theta_short(d), std::nullopt, std::nullopt});
  }
  if (cfg.inject_fault)
    for (Row& row : rows)
      if (!row.lambda.is_zero()) {
        row.closed = *row.closed + PolyT::monomial(row.closed->degree() + 1);
        break;
      }
  const bool run_oracle = d.weyl_group_order() <= caps.max_group_order;
  Result r;
  r.header = {"family", "rank", "lambda_c2", "lambda_label", "index", "closed", "recurrence", "oracle", "agree"};
  json out = json::array();
  for (Row& row : rows) {
    if (run_oracle) row.oracle = cached_lusztig(d, row.lambda, caps);
    bool agree = true;
    for (const auto* p : {&row.recur, &row.oracle})
      if (*p && **p != *row.closed) agree = false;
    r.ok = r.ok && agree;
    auto pj = [](const std::optional<PolyT>& p) { return p ? poly_json(*p) : json(nullptr); };
    out.push_back({{"lambda", wj(d, row.lambda)},
                   {"index", row.index},
                   {"E_coeffs", {{"closed", pj(row.closed)}, {"recurrence", pj(row.recur)}, {"oracle", pj(row.oracle)}}},
                   {"agree", agree}});
    r.rows.push_back({family_name(d.family), std::to_string(d.rank), c2_field(row.lambda),
                      d.fundamental_label(row.lambda), std::to_string(row.index), poly_field(row.closed),
                      poly_field(row.recur), poly_field(row.oracle), b(agree)});
  }
  r.report = {{"rows", out}, {"oracle_run", run_oracle}};
  return r;
}

Result cmd_recurrence(const RootDatum& d, const RunConfig& cfg) {
  const int top = recurrence_top(d);
  std::vector<int> ks;
  if (cfg.k > 0)
    ks.push_back(cfg.k);
  else
    for (int k = 1; k <= top; ++k) ks.push_back(k);
  Result r;
  r.header = {"family", "rank", "k", "check", "pass", "detail"};
  json reports = json::array();
  for (int k : ks) {
    const AggregateReport rep = verify_aggregate(d, k);
    json checks = json::array();
    for (const Check& c : rep.checks) {
      checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
      r.rows.push_back({rep.family, std::to_string(rep.rank), std::to_string(k), c.name, b(c.pass), c.detail});
    }
    r.ok = r.ok && rep.ok();
    reports.push_back({{"k", k}, {"checks", checks}, {"ok", rep.ok()}});
  }
  r.report = {{"indices", reports}};
  return r;
}

Result cmd_exterior(const RootDatum& d, const RunConfig& cfg, const ExteriorCaps& ecaps) {
  ExteriorReport rep;
  if (cfg.module == "adjoint")
    rep = verify_exterior_adjoint(d, ecaps);
  else if (cfg.module == "little-adjoint")
    rep = verify_exterior_little_adjoint(d, ecaps);
  else
    throw ConfigError("--module must be adjoint or little-adjoint");
  Result r;
  r.header = {"family", "rank", "module", "check", "pass", "detail"};
  json checks = json::array(), dec = json::array();
  for (const ExteriorCheck& c : rep.checks) {
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    r.rows.push_back({rep.family, std::to_string(rep.rank), rep.module, c.name, b(c.pass), c.detail});
  }
  for (const auto& [w, p] : rep.decomposition) dec.push_back({{"nu", wj(d, w)}, {"P", p.to_string()}});
  r.ok = rep.ok();
  r.report = {{"module", rep.module}, {"dim", rep.dim}, {"checks", checks}, {"decomposition", dec}};
  return r;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

void write_result(const Result& res, const RunConfig& cfg, const RootDatum& d, std::ostream& os) {
  if (cfg.format == "csv") {
    auto line = [&](const std::vector<std::string>& f) {
      for (std::size_t i = 0; i < f.size(); ++i) os << (i ? "," : "") << csv_escape(f[i]);
      os << '\n';
    };
    line(res.header);
    for (const auto& row : res.rows) line(row);
    return;
  }
  json j = res.report;
  j["schema"] = 1;
  j["command"] = cfg.command;
  j["family"] = family_name(d.family);
  j["rank"] = d.rank;
  j["ok"] = res.ok;
  os << j.dump(2) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Generalized exponents and small representations: verification sweeps", "gexp"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::simple);

  auto common = [&cfg](CLI::App* sub) {
    sub->add_option("--family", cfg.family, "A, B, C, D or G2")->required();
    sub->add_option("--rank", cfg.rank, "rank of the root system")->required();
    sub->add_option("--format", cfg.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--output", cfg.output, "write the report to this file");
    sub->add_option("--cap", cfg.cap, "replace the command's size cap (needs --accept-cost)");
    sub->add_flag("--accept-cost", cfg.accept_cost, "acknowledge a raised --cap");
    sub->add_flag("--inject-fault", cfg.inject_fault)->group("");
  };
  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {{"roots", "root datum summary"},
                      {"orders", "dominant weights below a bound, or compare two weights"},
                      {"lr", "tensor product multiplicities by two methods"},
                      {"kostant-verify", "certificates for the weights below 2rho"},
                      {"short-kostant-verify", "components of V_rho_s (x) V_rho_s against 2rho_s"},
                      {"genexp", "generalized exponents: closed, recurrence and oracle"},
                      {"recurrence-verify", "symbolic check of the recurrence coefficients"},
                      {"exterior-verify", "graded exterior algebra decomposition checks"}};
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    const std::string n = s.name;
    if (n == "orders" || n == "lr") {
      sub->add_option("--lambda", cfg.lambda, "fundamental coefficients, comma separated");
      sub->add_option("--mu", cfg.mu, "fundamental coefficients, comma separated");
    }
    if (n == "orders") {
      sub->add_option("--bound", cfg.bound, "fundamental coefficients of the bound (default 2rho)");
      sub->add_option("--filter", cfg.filter, "dominance, coordinatewise or small");
    }
    if (n == "kostant-verify") {
      sub->add_flag("--oracle", cfg.oracle, "confirm against V_rho (x) V_rho");
      sub->add_flag("--case-c", cfg.case_c, "route odd type-B weights through the odd-index construction");
    }
    if (n == "recurrence-verify") sub->add_option("--k", cfg.k, "recurrence index (default: all)");
    if (n == "exterior-verify")
      sub->add_option("--module", cfg.module, "adjoint or little-adjoint")
          ->check(CLI::IsMember({"adjoint", "little-adjoint"}));
    sub->callback([&cfg, n] { cfg.command = n; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? exit_ok : exit_usage;
  }

  try {
    if (cfg.cap && !cfg.accept_cost) throw ConfigError("--cap requires --accept-cost");
    if (cfg.cap && *cfg.cap <= 0) throw ConfigError("--cap must be positive");
    const RootDatum d = build_root_datum(parse_family(cfg.family), cfg.rank);
    OracleCaps caps;
    ExteriorCaps ecaps;
    if (cfg.command == "exterior-verify") {
      if (cfg.cap) ecaps.max_dim = static_cast<int>(*cfg.cap);
    } else {
      const std::int64_t rank_cap = cfg.cap.value_or(default_rank_cap(cfg));
      if (d.rank > rank_cap)
        throw ConfigError(cfg.command + " is capped at rank " + std::to_string(rank_cap) +
                          "; raise it with --cap N --accept-cost");
      if (cfg.cap) caps.max_group_order = std::max<std::uint64_t>(caps.max_group_order, d.weyl_group_order());
    }

    Result res;
    if (cfg.command == "roots")
      res = cmd_roots(d);
    else if (cfg.command == "orders")
      res = cmd_orders(d, cfg);
    else if (cfg.command == "lr")
      res = cmd_lr(d, cfg, caps);
    else if (cfg.command == "kostant-verify")
      res = cmd_kostant(d, cfg, caps);
    else if (cfg.command == "short-kostant-verify")
      res = cmd_short_kostant(d, caps, ecaps);
    else if (cfg.command == "genexp")
      res = cmd_genexp(d, cfg, caps);
    else if (cfg.command == "recurrence-verify")
      res = cmd_recurrence(d, cfg);
    else
      res = cmd_exterior(d, cfg, ecaps);

    if (cfg.output.empty()) {
      write_result(res, cfg, d, out);
    } else {
      std::ofstream f(cfg.output, std::ios::binary);
      if (!f) throw ConfigError("cannot open " + cfg.output);
      write_result(res, cfg, d, f);
    }
    if (!res.ok) err << "gexp: " << cfg.command << " found a mismatch\n";
    return res.ok ? exit_ok : exit_mismatch;
  } catch (const ConfigError& e) {
    err << "gexp: " << e.what() << '\n';
    return exit_usage;
  } catch (const ResourceError& e) {
    err << "gexp: " << e.what() << " (raise it with --cap N --accept-cost)\n";
    return exit_usage;
  } catch (const InternalError& e) {
    err << "gexp: inexact result: " << e.what() << '\n';
    return exit_mismatch;
  }
}

}  // namespace gexp
