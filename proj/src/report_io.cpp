#include "lpwidim/report_io.hpp"

#include <charconv>

namespace lpwidim::io {

std::string format_real(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

namespace {

std::string join_reals(const std::vector<double>& xs, char sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += format_real(xs[i]);
  }
  return out;
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

Json support_to_json(const std::vector<SupportEntry>& entries) {
  Json arr = Json::array();
  for (const auto& e : entries) arr.push_back(Json{{"point", e.point}, {"value", e.value}});
  return arr;
}

std::vector<SupportEntry> support_from_json(const Json& j) {
  std::vector<SupportEntry> out;
  for (const auto& e : j) out.push_back({e.at("point").get<LatticePoint>(), e.at("value").get<double>()});
  return out;
}

BoundRegime regime_from_name(const std::string& name) {
  for (auto r : {BoundRegime::bracket, BoundRegime::q_infinity_exact, BoundRegime::equal_case,
                 BoundRegime::equal_case_uncovered})
    if (regime_name(r) == name) return r;
  throw PreconditionError("unknown bound regime '" + name + "'");
}

}  // namespace

Json exponent_to_json(Exponent e) {
  if (e.is_infinite()) return "inf";
  return e.value();
}

Exponent exponent_from_json(const Json& j) {
  if (j.is_string()) return Exponent::parse(j.get<std::string>());
  return Exponent::finite(j.get<double>());
}

Json to_json(const Exponents& e) { return Json{{"p", e.p}, {"q", exponent_to_json(e.q)}, {"r", e.r}}; }

Exponents exponents_from_json(const Json& j) {
  return Exponents{j.at("p").get<double>(), exponent_from_json(j.at("q")), j.at("r").get<double>()};
}

// --- certification ----------------------------------------------------------

Json to_json(const CertificationReport& r) {
  return Json{{"n", r.n},
              {"m", r.m},
              {"exponents", to_json(r.exponents)},
              {"sample_count", r.sample_count},
              {"seed", r.seed},
              {"max_observed_distortion", r.max_observed_distortion},
              {"bound", r.bound},
              {"margin", r.margin},
              {"argmax_vector", r.argmax_vector},
              {"elapsed", r.elapsed}};
}

CertificationReport certification_from_json(const Json& j) {
  CertificationReport r;
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.exponents = exponents_from_json(j.at("exponents"));
  r.sample_count = j.at("sample_count").get<std::uint64_t>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.max_observed_distortion = j.at("max_observed_distortion").get<double>();
  r.bound = j.at("bound").get<double>();
  r.margin = j.at("margin").get<double>();
  r.argmax_vector = j.at("argmax_vector").get<std::vector<double>>();
  r.elapsed = j.at("elapsed").get<double>();
  return r;
}

std::string csv_header(const CertificationReport*) {
  return "n,m,p,q,r,sample_count,seed,max_observed_distortion,bound,margin,argmax_vector,elapsed";
}

std::string csv_row(const CertificationReport& r) {
  return std::to_string(r.n) + "," + std::to_string(r.m) + "," + format_real(r.exponents.p) + "," +
         r.exponents.q.to_string() + "," + format_real(r.exponents.r) + "," + std::to_string(r.sample_count) +
         "," + std::to_string(r.seed) + "," + format_real(r.max_observed_distortion) + "," +
         format_real(r.bound) + "," + format_real(r.margin) + "," + join_reals(r.argmax_vector, ' ') + "," +
         format_real(r.elapsed);
}

// --- bounds -----------------------------------------------------------------

Json to_json(const WidimBoundReport& r) {
  Json ex{{"p", exponent_to_json(r.p)}, {"q", exponent_to_json(r.q)}};
  ex["r"] = r.r ? Json(*r.r) : Json(nullptr);
  return Json{{"n", r.n},           {"epsilon", r.epsilon}, {"exponents", ex},
              {"lower", r.lower},   {"upper", r.upper},     {"exact", r.exact},
              {"regime", std::string(regime_name(r.regime))}};
}

WidimBoundReport widim_report_from_json(const Json& j) {
  const Json& ex = j.at("exponents");
  std::optional<double> r;
  if (!ex.at("r").is_null()) r = ex.at("r").get<double>();
  return WidimBoundReport{j.at("n").get<std::int64_t>(),
                          j.at("epsilon").get<double>(),
                          exponent_from_json(ex.at("p")),
                          exponent_from_json(ex.at("q")),
                          r,
                          j.at("lower").get<std::int64_t>(),
                          j.at("upper").get<std::int64_t>(),
                          j.at("exact").get<bool>(),
                          regime_from_name(j.at("regime").get<std::string>())};
}

std::string csv_header(const WidimBoundReport*) { return "n,epsilon,lower,upper,exact"; }

std::string csv_row(const WidimBoundReport& r) {
  return std::to_string(r.n) + "," + format_real(r.epsilon) + "," + std::to_string(r.lower) + "," +
         std::to_string(r.upper) + "," + bool_text(r.exact);
}

// --- group dynamics -----------------------------------------------------------

Json to_json(const EmbeddingCheckReport& r) {
  return Json{{"dim_d", r.dim_d},
              {"p", r.p},
              {"epsilon", r.epsilon},
              {"seed", r.seed},
              {"omega_size", r.omega_size},
              {"omega_prime_size", r.omega_prime_size},
              {"tail_radius", r.tail_radius},
              {"widim_constant", r.widim_constant},
              {"pairs_sampled", r.pairs_sampled},
              {"pairs_checked", r.pairs_checked},
              {"failures", r.failures},
              {"worst_margin", r.worst_margin},
              {"witness_x", support_to_json(r.witness_x)},
              {"witness_y", support_to_json(r.witness_y)},
              {"map_distortion_max", r.map_distortion_max},
              {"map_distortion_bound", r.map_distortion_bound}};
}

EmbeddingCheckReport embedding_report_from_json(const Json& j) {
  EmbeddingCheckReport r;
  r.dim_d = j.at("dim_d").get<std::size_t>();
  r.p = j.at("p").get<double>();
  r.epsilon = j.at("epsilon").get<double>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.omega_size = j.at("omega_size").get<std::uint64_t>();
  r.omega_prime_size = j.at("omega_prime_size").get<std::uint64_t>();
  r.tail_radius = j.at("tail_radius").get<std::int64_t>();
  r.widim_constant = j.at("widim_constant").get<std::int64_t>();
  r.pairs_sampled = j.at("pairs_sampled").get<std::uint64_t>();
  r.pairs_checked = j.at("pairs_checked").get<std::uint64_t>();
  r.failures = j.at("failures").get<std::uint64_t>();
  r.worst_margin = j.at("worst_margin").get<double>();
  r.witness_x = support_from_json(j.at("witness_x"));
  r.witness_y = support_from_json(j.at("witness_y"));
  r.map_distortion_max = j.at("map_distortion_max").get<double>();
  r.map_distortion_bound = j.at("map_distortion_bound").get<double>();
  return r;
}

std::string csv_header(const EmbeddingCheckReport*) {
  return "dim_d,p,epsilon,seed,omega_size,omega_prime_size,tail_radius,widim_constant,pairs_sampled,"
         "pairs_checked,failures,worst_margin,map_distortion_max,map_distortion_bound";
}

std::string csv_row(const EmbeddingCheckReport& r) {
  return std::to_string(r.dim_d) + "," + format_real(r.p) + "," + format_real(r.epsilon) + "," +
         std::to_string(r.seed) + "," + std::to_string(r.omega_size) + "," + std::to_string(r.omega_prime_size) +
         "," + std::to_string(r.tail_radius) + "," + std::to_string(r.widim_constant) + "," +
         std::to_string(r.pairs_sampled) + "," + std::to_string(r.pairs_checked) + "," +
         std::to_string(r.failures) + "," + format_real(r.worst_margin) + "," +
         format_real(r.map_distortion_max) + "," + format_real(r.map_distortion_bound);
}

Json to_json(const MeanDimensionRow& r) {
  return Json{{"radius", r.radius}, {"omega_size", r.omega_size}, {"widim_bound", r.widim_bound}, {"ratio", r.ratio}};
}

MeanDimensionRow mean_dimension_row_from_json(const Json& j) {
  return MeanDimensionRow{j.at("radius").get<std::int64_t>(), j.at("omega_size").get<std::uint64_t>(),
                          j.at("widim_bound").get<std::int64_t>(), j.at("ratio").get<double>()};
}

std::string csv_header(const MeanDimensionRow*) { return "radius,omega_size,widim_bound,ratio"; }

std::string csv_row(const MeanDimensionRow& r) {
  return std::to_string(r.radius) + "," + std::to_string(r.omega_size) + "," + std::to_string(r.widim_bound) +
         "," + format_real(r.ratio);
}

}  // namespace lpwidim::io
