#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "lpwidim/report_io.hpp"

using lpwidim::io::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = lpwidim::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream is(text);
  std::string l;
  while (std::getline(is, l))
    if (l == line) return true;
  return false;
}

}  // namespace

TEST_CASE("bounds rows") {
  auto r = run({"bounds", "--p", "1", "--q", "2", "--eps", "0.5", "--n", "100"});
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "100,0.5,3,15,false"));
  CHECK(has_line(r.out, "# seed=24301"));
  r = run({"bounds", "--p", "2", "--q", "inf", "--eps", "0.5", "--n", "100"});
  CHECK(has_line(r.out, "100,0.5,15,15,true"));
  r = run({"bounds", "--p", "2", "--q", "1", "--eps", "0.5", "--n", "7"});
  CHECK(has_line(r.out, "7,0.5,7,7,true"));
  r = run({"bounds", "--p", "1", "--q", "2", "--eps", "0.5,1", "--n", "1..3"});
  CHECK(has_line(r.out, "3,1,0,3,false"));
  CHECK(has_line(r.out, "1,0.5,1,1,true"));
}

TEST_CASE("errors give exit code 2") {
  CHECK(run({"bounds", "--p", "0.5", "--q", "2"}).code == 2);
  CHECK(run({"bounds", "--p", "1", "--q", "2", "--n", "0"}).code == 2);
  CHECK(run({"bounds", "--eps", "x"}).code == 2);
  CHECK(run({"certify", "--p", "2", "--q", "2"}).code == 2);
  CHECK(run({"map", "--m", "1"}, "").code == 2);
  CHECK(run({"nonsense"}).code != 0);
  CHECK(run({"oracle", "--lemma", "swap", "--s", "2", "--x", "1", "--y", "2", "--z", "0"}).code == 2);
}

TEST_CASE("map reads a vector from standard input") {
  const auto r = run({"map", "--m", "1"}, "-3 1 2\n");
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "0,-3,-1"));
  CHECK(has_line(r.out, "1,1,0"));
  CHECK(has_line(r.out, "# threshold=2"));
  const auto closed = run({"map", "--m", "1", "--method", "closed"}, "-3 1 2\n");
  CHECK(has_line(closed.out, "0,-3,-1"));
  const auto j = Json::parse(run({"map", "--m", "1", "--format", "json"}, "0.5 0.5 0").out);
  CHECK(j["output"] == Json::array({0.0, 0.0, 0.0}));
  CHECK(j["parameters"]["m"] == "1");
}

TEST_CASE("map reads a vector from a file") {
  const std::string path = "cli_test_vector.txt";
  std::ofstream(path) << "5 4 3 2 0\n";
  const auto r = run({"map", "--m", "2", "--input", path});
  std::remove(path.c_str());
  CHECK(r.code == 0);
  CHECK(has_line(r.out, "0,5,2"));
  CHECK(has_line(r.out, "1,4,1"));
  CHECK(has_line(r.out, "2,3,0"));
}

TEST_CASE("certify json round-trips and is reproducible") {
  const std::vector<std::string> args{"certify", "--p", "1", "--q", "2", "--n", "8", "--m", "1,3",
                                      "--samples", "2000", "--restarts", "4", "--format", "json"};
  const auto a = run(args);
  CHECK(a.code == 0);
  auto w = args;
  w.insert(w.end(), {"--workers", "4"});
  CHECK(run(w).out == a.out);
  const auto j = Json::parse(a.out);
  CHECK(j["all_passed"] == true);
  REQUIRE(j["reports"].size() == 4);
  for (const auto& entry : j["reports"]) {
    const auto rep = lpwidim::io::certification_from_json(entry["report"]);
    CHECK(lpwidim::io::to_json(rep) == entry["report"]);
    CHECK(rep.passed());
  }
}

TEST_CASE("oracle commands") {
  const auto grids = run({"oracle"});
  CHECK(grids.code == 0);
  CHECK(grids.out.find("swap,") != std::string::npos);
  CHECK(run({"oracle", "--lemma", "swap", "--s", "2", "--x", "3", "--y", "1", "--z", "2"}).code == 0);
  CHECK(run({"oracle", "--lemma", "key", "--s", "2", "--c", "1", "--t", "0.5", "--xs", "0.5,0.5"}).code == 0);
  const auto mx = run({"oracle", "--lemma", "keymax", "--s", "2", "--c", "1", "--t", "0.5", "--n", "2", "--format", "json"});
  CHECK(mx.code == 0);
  CHECK(Json::parse(mx.out)["rows"][0]["vertex"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("group command writes to a file") {
  const std::string path = "cli_test_group.json";
  const auto r = run({"group", "--samples", "500", "--format", "json", "--out", path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(path);
  const Json j = Json::parse(f);
  std::remove(path.c_str());
  CHECK(j["widim_constant"] == 7);
  CHECK(j["tail_set"]["radius"] == 2);
  CHECK(j["mean_dimension"].size() == 7);
  const auto rep = lpwidim::io::embedding_report_from_json(j["embedding_check"]);
  CHECK(lpwidim::io::to_json(rep) == j["embedding_check"]);
  CHECK(rep.failures == 0);
}

TEST_CASE("group accepts alternative weights") {
  const auto r = run({"group", "--samples", "300", "--weight-base", "3", "--weight-total", "0.5", "--table", "embedding"});
  CHECK(r.code == 0);
  CHECK(r.out.find("geometric(base=3,total=0.5)") != std::string::npos);
}
