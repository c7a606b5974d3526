#include <doctest.h>

#include "lpwidim/report_io.hpp"

using namespace lpwidim;
using io::Json;

TEST_CASE("real formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 12345678.9, 0.0, -2.5}) CHECK(std::stod(io::format_real(v)) == v);
  CHECK(io::format_real(0.5) == "0.5");
  CHECK(io::format_real(100) == "100");
}

TEST_CASE("bounds report round-trips through json") {
  for (const auto& r : {bracket(100, 0.5, make_exponents(1, 2)), bracket(50, 0.3, make_exponents(2, Exponent::infinity())),
                        bracket_any(7, 1.5, Exponent::finite(2), Exponent::finite(1))}) {
    const Json j = Json::parse(io::to_json(r).dump());
    CHECK(io::widim_report_from_json(j) == r);
  }
  CHECK(io::csv_row(bracket(100, 0.5, make_exponents(1, 2))) == "100,0.5,3,15,false");
}

TEST_CASE("certification report round-trips through json") {
  const auto r = monte_carlo_certify(6, SparsityLevel(2), make_exponents(1.5, 3), 500, 77);
  const auto back = io::certification_from_json(Json::parse(io::to_json(r).dump()));
  CHECK(back.same_outcome(r));
  CHECK(back.elapsed == r.elapsed);
  const auto keys = io::to_json(r);
  std::vector<std::string> names;
  for (auto it = keys.begin(); it != keys.end(); ++it) names.push_back(it.key());
  CHECK(names == std::vector<std::string>{"n", "m", "exponents", "sample_count", "seed", "max_observed_distortion",
                                          "bound", "margin", "argmax_vector", "elapsed"});
  const auto inf = monte_carlo_certify(3, SparsityLevel(1), make_exponents(1, Exponent::infinity()), 10, 1);
  CHECK(io::certification_from_json(Json::parse(io::to_json(inf).dump())).same_outcome(inf));
}

TEST_CASE("group reports round-trip through json") {
  const auto m = WeightedGroupMetric::standard(1);
  const auto omega = LatticeBox{{0}, 1}.points();
  const auto r = embedding_check(m, omega, 1.0, 0.5, 300, 2);
  CHECK(io::embedding_report_from_json(Json::parse(io::to_json(r).dump())) == r);
  const std::vector<std::int64_t> radii{1, 2, 3};
  for (const auto& row : mean_dimension_table(m, 1.0, 0.5, radii))
    CHECK(io::mean_dimension_row_from_json(Json::parse(io::to_json(row).dump())) == row);
}
