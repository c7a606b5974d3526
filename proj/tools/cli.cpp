#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "lpwidim/bounds.hpp"
#include "lpwidim/certify.hpp"
#include "lpwidim/group_dynamics.hpp"
#include "lpwidim/report_io.hpp"
#include "lpwidim/threshold_map.hpp"

namespace lpwidim::cli {

namespace {

using io::Json;

// Parameters echoed into every output, in insertion order.
using Params = std::vector<std::pair<std::string, std::string>>;

struct Common {
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  std::string format = "csv";
  std::string out_path;
};

struct Result {
  std::string text;
  int status = 0;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--seed", c.seed, "64-bit seed")->capture_default_str();
  sub->add_option("--workers", c.workers, "worker threads (does not affect output)")->capture_default_str();
  sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  sub->add_option("--out", c.out_path, "output file (default: standard output)");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  std::istringstream is(text);
  while (std::getline(is, cur, sep))
    if (!cur.empty()) parts.push_back(cur);
  if (parts.empty()) throw PreconditionError("empty list '" + text + "'");
  return parts;
}

double parse_real(const std::string& s) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw PreconditionError("cannot parse number '" + s + "'");
  }
  if (used != s.size()) throw PreconditionError("cannot parse number '" + s + "'");
  return v;
}

std::int64_t parse_int(const std::string& s) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (const std::exception&) {
    throw PreconditionError("cannot parse integer '" + s + "'");
  }
  if (used != s.size()) throw PreconditionError("cannot parse integer '" + s + "'");
  return v;
}

// "a,b,c" with items either integers or inclusive ranges "lo..hi".
std::vector<std::int64_t> parse_int_list(const std::string& text) {
  std::vector<std::int64_t> out;
  for (const auto& item : split(text, ',')) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_int(item));
      continue;
    }
    const std::int64_t lo = parse_int(item.substr(0, dots));
    const std::int64_t hi = parse_int(item.substr(dots + 2));
    if (hi < lo) throw PreconditionError("empty range '" + item + "'");
    for (std::int64_t v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  for (const auto& item : split(text, ',')) out.push_back(parse_real(item));
  return out;
}

std::vector<std::size_t> to_sizes(const std::vector<std::int64_t>& xs, const char* what) {
  std::vector<std::size_t> out;
  for (auto v : xs) {
    if (v < 0) throw PreconditionError(std::string(what) + " must be nonnegative");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

std::string csv_preamble(const std::string& command, const Params& params) {
  std::string s = "# lpwidim " + command + "\n";
  for (const auto& [k, v] : params) s += "# " + k + "=" + v + "\n";
  return s;
}

Json params_json(const Params& params) {
  Json j = Json::object();
  for (const auto& [k, v] : params) j[k] = v;
  return j;
}

Json envelope(const std::string& command, const Params& params) {
  return Json{{"command", command}, {"parameters", params_json(params)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// --- bounds ------------------------------------------------------------------

struct BoundsArgs {
  std::string p = "1", q = "2", eps = "0.5", n = "100";
};

Result run_bounds(const BoundsArgs& a, const Common& c) {
  const Exponent p = Exponent::parse(a.p);
  const Exponent q = Exponent::parse(a.q);
  const auto ns = parse_int_list(a.n);
  const auto epss = parse_real_list(a.eps);
  std::vector<WidimBoundReport> rows;
  for (auto n : ns)
    for (double eps : epss) rows.push_back(bracket_any(n, eps, p, q));

  const Params params{{"p", p.to_string()}, {"q", q.to_string()}, {"eps", a.eps}, {"n", a.n},
                      {"seed", std::to_string(c.seed)}};
  if (c.format == "json") {
    Json j = envelope("bounds", params);
    j["rows"] = Json::array();
    for (const auto& r : rows) j["rows"].push_back(io::to_json(r));
    return {dump(j)};
  }
  std::string s = csv_preamble("bounds", params) + io::csv_header(static_cast<WidimBoundReport*>(nullptr)) + "\n";
  for (const auto& r : rows) s += io::csv_row(r) + "\n";
  return {s};
}

// --- map -----------------------------------------------------------------------

struct MapArgs {
  std::size_t m = 1;
  std::string input = "-";
  std::string method = "equivariant";
  std::string q = "inf";
};

RealVector read_vector(const std::string& path, std::istream& in) {
  std::string line;
  if (path == "-") {
    std::getline(in, line);
  } else {
    std::ifstream f(path);
    if (!f) throw PreconditionError("cannot open input '" + path + "'");
    std::getline(f, line);
  }
  std::istringstream is(line);
  std::vector<double> xs;
  std::string tok;
  while (is >> tok) xs.push_back(parse_real(tok));
  return RealVector(std::move(xs));
}

Result run_map(const MapArgs& a, const Common& c, std::istream& in) {
  const RealVector x = read_vector(a.input, in);
  const SparsityLevel m(a.m);
  const Exponent q = Exponent::parse(a.q);
  const RealVector fx = a.method == "closed" ? f_closed(x, m) : f_equivariant(x, m);
  const double dist = lq_distance(x, fx, q);
  ThresholdWorkspace ws(x.size());
  const double tau = detail::order_statistic_threshold(x.coords(), m.m, ws);

  const Params params{{"m", std::to_string(a.m)}, {"method", a.method},       {"q", q.to_string()},
                      {"n", std::to_string(x.size())}, {"seed", std::to_string(c.seed)}};
  if (c.format == "json") {
    Json j = envelope("map", params);
    j["input"] = x.to_vector();
    j["output"] = fx.to_vector();
    j["threshold"] = tau;
    j["distortion"] = dist;
    return {dump(j)};
  }
  std::string s = csv_preamble("map", params);
  s += "# threshold=" + io::format_real(tau) + "\n";
  s += "# distortion=" + io::format_real(dist) + "\n";
  s += "i,x,f_x\n";
  for (std::size_t i = 0; i < x.size(); ++i)
    s += std::to_string(i) + "," + io::format_real(x[i]) + "," + io::format_real(fx[i]) + "\n";
  return {s};
}

// --- certify -------------------------------------------------------------------

struct CertifyArgs {
  std::string p = "1", q = "2", n = "16", m = "3";
  std::uint64_t samples = 100000;
  std::uint64_t restarts = 32;
  std::string method = "both";
  bool timing = false;
};

Result run_certify(const CertifyArgs& a, const Common& c) {
  const Exponents e = make_exponents(Exponent::parse(a.p).value(), Exponent::parse(a.q));
  const auto ns = to_sizes(parse_int_list(a.n), "n");
  const auto ms = to_sizes(parse_int_list(a.m), "m");
  struct Entry {
    std::string method;
    CertificationReport report;
  };
  std::vector<Entry> entries;
  for (auto n : ns) {
    for (auto m : ms) {
      if (a.method == "mc" || a.method == "both")
        entries.push_back({"monte_carlo", monte_carlo_certify(n, SparsityLevel(m), e, a.samples, c.seed,
                                                              CertifyOptions{c.workers, a.timing})});
      if (a.method == "adversarial" || a.method == "both") {
        AdversarialOptions opts;
        opts.workers = c.workers;
        opts.record_elapsed = a.timing;
        entries.push_back({"adversarial", adversarial_certify(n, SparsityLevel(m), e, a.restarts, c.seed, opts)});
      }
    }
  }
  bool all_passed = true;
  for (const auto& en : entries) all_passed = all_passed && en.report.passed();

  const Params params{{"p", io::format_real(e.p)},
                      {"q", e.q.to_string()},
                      {"n", a.n},
                      {"m", a.m},
                      {"samples", std::to_string(a.samples)},
                      {"restarts", std::to_string(a.restarts)},
                      {"method", a.method},
                      {"seed", std::to_string(c.seed)}};
  const int status = all_passed ? 0 : 1;
  if (c.format == "json") {
    Json j = envelope("certify", params);
    j["all_passed"] = all_passed;
    j["reports"] = Json::array();
    for (const auto& en : entries)
      j["reports"].push_back(
          Json{{"method", en.method}, {"passed", en.report.passed()}, {"report", io::to_json(en.report)}});
    return {dump(j), status};
  }
  std::string s = csv_preamble("certify", params);
  s += "method,passed," + io::csv_header(static_cast<CertificationReport*>(nullptr)) + "\n";
  for (const auto& en : entries)
    s += en.method + "," + (en.report.passed() ? "true" : "false") + "," + io::csv_row(en.report) + "\n";
  return {s, status};
}

// --- oracle --------------------------------------------------------------------

struct OracleArgs {
  std::string lemma = "all";
  std::optional<double> s, x, y, z, c, t;
  std::optional<std::string> xs;
  std::optional<std::size_t> n;
};

Result run_oracle(const OracleArgs& a, const Common& c) {
  Params params{{"lemma", a.lemma}, {"seed", std::to_string(c.seed)}};
  Json rows = Json::array();
  std::string csv;
  bool ok = true;

  const bool point = a.s.has_value();
  if (point) {
    const double s = *a.s;
    params.emplace_back("s", io::format_real(s));
    if (a.lemma == "swap") {
      if (!a.x || !a.y || !a.z) throw PreconditionError("oracle --lemma swap needs --x --y --z");
      const bool holds = check_lemma_swap(s, *a.x, *a.y, *a.z);
      ok = holds;
      params.insert(params.end(), {{"x", io::format_real(*a.x)}, {"y", io::format_real(*a.y)}, {"z", io::format_real(*a.z)}});
      rows.push_back(Json{{"lemma", "swap"}, {"holds", holds}});
      csv = "lemma,holds\nswap," + std::string(holds ? "true" : "false") + "\n";
    } else if (a.lemma == "key") {
      if (!a.c || !a.t || !a.xs) throw PreconditionError("oracle --lemma key needs --c --t --xs");
      const auto xs = parse_real_list(*a.xs);
      const bool holds = check_key_lemma(s, *a.c, *a.t, xs);
      ok = holds;
      params.insert(params.end(), {{"c", io::format_real(*a.c)}, {"t", io::format_real(*a.t)}, {"xs", *a.xs}});
      rows.push_back(Json{{"lemma", "key"}, {"holds", holds}});
      csv = "lemma,holds\nkey," + std::string(holds ? "true" : "false") + "\n";
    } else if (a.lemma == "keymax") {
      if (!a.c || !a.t || !a.n) throw PreconditionError("oracle --lemma keymax needs --c --t --n");
      const auto mx = key_lemma_maximum(s, *a.c, *a.t, *a.n, c.seed);
      ok = mx.value() <= mx.bound + kEqualityTolerance * std::max(1.0, mx.bound);
      params.insert(params.end(), {{"c", io::format_real(*a.c)}, {"t", io::format_real(*a.t)}, {"n", std::to_string(*a.n)}});
      rows.push_back(Json{{"lemma", "keymax"}, {"vertex", mx.vertex}, {"sampled", mx.sampled}, {"bound", mx.bound}});
      csv = "lemma,vertex,sampled,bound\nkeymax," + io::format_real(mx.vertex) + "," + io::format_real(mx.sampled) +
            "," + io::format_real(mx.bound) + "\n";
    } else {
      throw PreconditionError("point evaluation needs --lemma swap, key or keymax");
    }
  } else {
    csv = "lemma,checked,violations,oracle_exceedances,vertex_beaten\n";
    auto emit = [&](const std::string& name, const LemmaGridResult& g) {
      ok = ok && g.violations == 0 && g.oracle_exceedances == 0 && g.vertex_beaten == 0;
      rows.push_back(Json{{"lemma", name},
                          {"checked", g.checked},
                          {"violations", g.violations},
                          {"oracle_exceedances", g.oracle_exceedances},
                          {"vertex_beaten", g.vertex_beaten}});
      csv += name + "," + std::to_string(g.checked) + "," + std::to_string(g.violations) + "," +
             std::to_string(g.oracle_exceedances) + "," + std::to_string(g.vertex_beaten) + "\n";
    };
    if (a.lemma == "swap" || a.lemma == "all") emit("swap", lemma_swap_grid());
    if (a.lemma == "key" || a.lemma == "all") emit("key", key_lemma_grid(c.seed));
    if (rows.empty()) throw PreconditionError("grid mode needs --lemma swap, key or all");
  }

  if (c.format == "json") {
    Json j = envelope("oracle", params);
    j["all_passed"] = ok;
    j["rows"] = rows;
    return {dump(j), ok ? 0 : 1};
  }
  return {csv_preamble("oracle", params) + csv, ok ? 0 : 1};
}

// --- group ---------------------------------------------------------------------

struct GroupArgs {
  std::size_t d = 1;
  double p = 1.0;
  double eps = 0.5;
  std::uint64_t samples = 10000;
  std::int64_t omega_radius = 3;
  std::string radii = "1..7";
  double weight_base = 2.0;
  double weight_total = 0.75;
  std::string table = "both";
};

Result run_group(const GroupArgs& a, const Common& c) {
  const auto metric = WeightedGroupMetric::geometric(a.d, a.weight_base, a.weight_total);
  const auto omega = LatticeBox{LatticePoint(a.d, 0), a.omega_radius}.points();
  const auto radii = parse_int_list(a.radii);
  const LatticeBox tail = tail_set(metric, LatticePoint(a.d, 0), a.eps);
  const auto report = embedding_check(metric, omega, a.p, a.eps, a.samples, c.seed, EmbeddingCheckOptions{c.workers});
  const auto rows = mean_dimension_table(metric, a.p, a.eps, radii);

  const Params params{{"d", std::to_string(a.d)},
                      {"p", io::format_real(a.p)},
                      {"eps", io::format_real(a.eps)},
                      {"samples", std::to_string(a.samples)},
                      {"omega_radius", std::to_string(a.omega_radius)},
                      {"radii", a.radii},
                      {"weight", metric.name()},
                      {"seed", std::to_string(c.seed)}};
  const int status = report.passed() ? 0 : 1;
  if (c.format == "json") {
    Json j = envelope("group", params);
    j["tail_set"] = Json{{"center", tail.center}, {"radius", tail.radius}};
    j["widim_constant"] = report.widim_constant;
    if (a.table != "mean-dimension") j["embedding_check"] = io::to_json(report);
    if (a.table != "embedding") {
      j["mean_dimension"] = Json::array();
      for (const auto& r : rows) j["mean_dimension"].push_back(io::to_json(r));
    }
    return {dump(j), status};
  }
  std::string s = csv_preamble("group", params);
  s += "# tail_set_radius=" + std::to_string(tail.radius) + "\n";
  s += "# widim_constant=" + std::to_string(report.widim_constant) + "\n";
  if (a.table != "mean-dimension")
    s += io::csv_header(static_cast<EmbeddingCheckReport*>(nullptr)) + "\n" + io::csv_row(report) + "\n";
  if (a.table == "both") s += "\n";
  if (a.table != "embedding") {
    s += io::csv_header(static_cast<MeanDimensionRow*>(nullptr)) + "\n";
    for (const auto& r : rows) s += io::csv_row(r) + "\n";
  }
  return {s, status};
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparsification maps on lp-balls and width-dimension bounds", "lpwidim"};
  app.require_subcommand(1);

  Common common;
  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "Widim_eps bounds for B_p(R^n) under d_q");
  b->add_option("--p", bounds.p, "p >= 1 or inf")->capture_default_str();
  b->add_option("--q", bounds.q, "q >= 1 or inf")->capture_default_str();
  b->add_option("--eps", bounds.eps, "comma-separated eps values")->capture_default_str();
  b->add_option("--n", bounds.n, "comma-separated n values or lo..hi ranges")->capture_default_str();
  add_common(b, common);

  MapArgs map;
  auto* mp = app.add_subcommand("map", "apply the sparsification map to one vector");
  mp->add_option("--m", map.m, "sparsity level")->capture_default_str();
  mp->add_option("--input", map.input, "file with one whitespace-separated vector, - for stdin")->capture_default_str();
  mp->add_option("--method", map.method, "equivariant or closed")
      ->check(CLI::IsMember({"equivariant", "closed"}))
      ->capture_default_str();
  mp->add_option("--q", map.q, "exponent of the reported distortion")->capture_default_str();
  add_common(mp, common);

  CertifyArgs cert;
  auto* ct = app.add_subcommand("certify", "certify the distortion bound by sampling and search");
  ct->add_option("--p", cert.p)->capture_default_str();
  ct->add_option("--q", cert.q)->capture_default_str();
  ct->add_option("--n", cert.n, "comma-separated n values or ranges")->capture_default_str();
  ct->add_option("--m", cert.m, "comma-separated m values or ranges")->capture_default_str();
  ct->add_option("--samples", cert.samples, "Monte Carlo sample count")->capture_default_str();
  ct->add_option("--restarts", cert.restarts, "adversarial random restarts")->capture_default_str();
  ct->add_option("--method", cert.method, "mc, adversarial or both")
      ->check(CLI::IsMember({"mc", "adversarial", "both"}))
      ->capture_default_str();
  ct->add_flag("--timing", cert.timing, "record wall-clock time (makes output non-reproducible)");
  add_common(ct, common);

  OracleArgs orc;
  auto* oc = app.add_subcommand("oracle", "brute-force checks of the supporting inequalities");
  oc->add_option("--lemma", orc.lemma, "swap, key, keymax or all")
      ->check(CLI::IsMember({"swap", "key", "keymax", "all"}))
      ->capture_default_str();
  oc->add_option("--s", orc.s);
  oc->add_option("--x", orc.x);
  oc->add_option("--y", orc.y);
  oc->add_option("--z", orc.z);
  oc->add_option("--c", orc.c);
  oc->add_option("--t", orc.t);
  oc->add_option("--xs", orc.xs, "comma-separated values");
  oc->add_option("--n", orc.n);
  add_common(oc, common);

  GroupArgs grp;
  auto* gp = app.add_subcommand("group", "embedding check and mean-dimension table on Z^d");
  gp->add_option("--d", grp.d)->capture_default_str();
  gp->add_option("--p", grp.p)->capture_default_str();
  gp->add_option("--eps", grp.eps)->capture_default_str();
  gp->add_option("--samples", grp.samples)->capture_default_str();
  gp->add_option("--omega-radius", grp.omega_radius, "Omega = [-R, R]^d")->capture_default_str();
  gp->add_option("--radii", grp.radii, "Foelner box radii, list or lo..hi")->capture_default_str();
  gp->add_option("--weight-base", grp.weight_base, "w(g) proportional to base^{-|g|_1}")->capture_default_str();
  gp->add_option("--weight-total", grp.weight_total, "sum of all weights, <= 1")->capture_default_str();
  gp->add_option("--table", grp.table, "embedding, mean-dimension or both")
      ->check(CLI::IsMember({"embedding", "mean-dimension", "both"}))
      ->capture_default_str();
  add_common(gp, common);

  std::vector<const char*> argv{"lpwidim"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    Result res;
    if (b->parsed()) res = run_bounds(bounds, common);
    else if (mp->parsed()) res = run_map(map, common, in);
    else if (ct->parsed()) res = run_certify(cert, common);
    else if (oc->parsed()) res = run_oracle(orc, common);
    else res = run_group(grp, common);

    if (common.out_path.empty()) {
      out << res.text;
    } else {
      std::ofstream f(common.out_path, std::ios::binary);
      if (!f) throw PreconditionError("cannot write '" + common.out_path + "'");
      f << res.text;
    }
    return res.status;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace lpwidim::cli
