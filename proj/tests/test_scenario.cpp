#include <doctest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "geocontact/builtin_scenarios.hpp"
#include "geocontact/scenario.hpp"

using namespace geocontact;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string builtin_text(const std::string& name) {
  for (const auto& b : builtin_scenarios()) {
    if (b.name == name) return b.text;
  }
  FAIL("missing builtin ", name);
  return "";
}

}  // namespace

TEST_CASE("bundled sphere scenario matches its published parameters") {
  const Scenario s = load_scenario("sphere_eta100");
  CHECK(s.mode == "kinematic");
  CHECK(s.finger.chart == "sphere");
  CHECK(s.finger.params[0] == doctest::Approx(0.04));
  CHECK(s.object.params[0] == doctest::Approx(0.1));
  CHECK(s.eta == doctest::Approx(100.0));
  REQUIRE(s.contacts.size() == 3);
  CHECK(s.contacts[0].object_u == doctest::Approx(M_PI / 6.0));
  CHECK(s.contacts[0].object_v == doctest::Approx(M_PI / 6.0));
  CHECK(s.contacts[1].object_u == doctest::Approx(2.0 * M_PI / 3.0));
  CHECK(s.contacts[1].object_v == doctest::Approx(M_PI / 6.0));
  CHECK(s.contacts[2].object_u == doctest::Approx(M_PI / 10.0));
  CHECK(s.contacts[2].object_v == doctest::Approx(M_PI));
}

TEST_CASE("bundled ellipsoid scenario matches its published parameters") {
  const Scenario s = load_scenario("ellipsoid_eta100");
  CHECK(s.object.chart == "ellipsoid");
  REQUIRE(s.object.params.size() == 3);
  CHECK(s.object.params[0] == doctest::Approx(0.3));
  CHECK(s.object.params[1] == doctest::Approx(0.2));
  CHECK(s.object.params[2] == doctest::Approx(0.1));
  REQUIRE(s.contacts.size() == 3);
  CHECK(s.contacts[0].object_u == doctest::Approx(2.0 * M_PI / 3.0));
  CHECK(s.contacts[0].object_v == doctest::Approx(M_PI / 2.0));
  CHECK(s.contacts[1].object_u == doctest::Approx(-2.0 * M_PI / 3.0));
  CHECK(s.contacts[1].object_v == doctest::Approx(-M_PI / 2.0));
  CHECK(s.contacts[2].object_u == doctest::Approx(M_PI / 6.0));
}

TEST_CASE("validation rejects bad fields by name") {
  const std::string base = builtin_text("sphere_eta100");

  SUBCASE("negative eta") {
    std::string text = base;
    const auto pos = text.find("eta = 100.0");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 11, "eta = -1.0");
    const Scenario s = parse_scenario(text, "bad");
    try {
      validate_scenario(s);
      FAIL("expected a validation error");
    } catch (const ValidationError& e) {
      CHECK(e.field == "control.eta");
    }
  }

  SUBCASE("sigma crossing zero inside the horizon") {
    std::string text = base;
    const auto pos = text.find("coeffs = 1.0 0.2 -0.02");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 22, "coeffs = 0.001 0.0 -0.4");
    const Scenario s = parse_scenario(text, "bad");
    CHECK_THROWS_AS(validate_scenario(s), ValidationError);
  }

  SUBCASE("window ordering") {
    std::string text = base;
    text += "\n[disturbance]\ncontact = 1\ntype = rate\nt_start = 0.1\nt_end = 0.1\ndu = 0.1\ndv = 0\n";
    CHECK_THROWS_AS(validate_scenario(parse_scenario(text, "bad")), ValidationError);
  }

  SUBCASE("contact index out of range") {
    std::string text = base;
    text += "\n[disturbance]\ncontact = 9\ntype = rate\nt_start = 0.1\nt_end = 0.2\ndu = 0.1\ndv = 0\n";
    CHECK_THROWS_AS(validate_scenario(parse_scenario(text, "bad")), ValidationError);
  }

  SUBCASE("contact outside the chart domain") {
    std::string text = base;
    const std::string needle = "object_u = 0.5235987755982988";
    const auto pos = text.find(needle);
    REQUIRE(pos != std::string::npos);
    text.replace(pos, needle.size(), "object_u = 0.0");
    CHECK_THROWS_AS(validate_scenario(parse_scenario(text, "bad")), ValidationError);
  }
}

TEST_CASE("parse errors carry line context") {
  try {
    parse_scenario("mode = kinematic\nnot a key value line\n", "broken");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_scenario("mode = kinematic\n[nope]\n", "broken"), ParseError);
  CHECK_THROWS_AS(load_scenario("no_such_scenario_anywhere"), ParseError);
}

TEST_CASE("scenario files load from disk as well as from the corpus") {
  const auto dir = std::filesystem::temp_directory_path() / "gc_scn_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "copy.scn";
  std::ofstream(path) << builtin_text("corollary_sphere");
  const Scenario s = load_scenario(path.string());
  CHECK(s.name == "copy");
  CHECK(s.mode == "rolling-corollary");
}

TEST_CASE("identical runs produce byte-identical logs") {
  Scenario s = load_scenario("corollary_sphere");
  s.step = 1e-3;  // keep the test quick
  const RunResult result1 = run_scenario(s);
  const RunResult result2 = run_scenario(s);

  const auto dir = std::filesystem::temp_directory_path() / "gc_repro";
  std::filesystem::remove_all(dir);
  const auto files1 = write_outputs(result1, (dir / "a").string());
  const auto files2 = write_outputs(result2, (dir / "b").string());
  REQUIRE(files1.size() == files2.size());
  for (std::size_t i = 0; i < files1.size(); ++i) {
    CHECK(slurp(files1[i]) == slurp(files2[i]));
  }
}

TEST_CASE("csv schema is fixed") {
  Scenario s = load_scenario("corollary_sphere");
  s.step = 1e-3;
  const RunResult result = run_scenario(s);
  const auto dir = std::filesystem::temp_directory_path() / "gc_schema";
  const auto files = write_outputs(result, dir.string());

  std::ifstream in(files[0]);
  std::string header;
  std::getline(in, header);
  CHECK(header == "t,u1,v1,u2,v2,psi,du1,dv1,du2,dv2,dpsi,v_rel_x,v_rel_y");

  double prev_t = -1.0;
  std::string line;
  while (std::getline(in, line)) {
    const double t = std::stod(line.substr(0, line.find(',')));
    CHECK(t > prev_t);
    prev_t = t;
  }
}

TEST_CASE("kinematic scenario metrics report the rejection") {
  Scenario s = load_scenario("sphere_eta100");
  const RunResult result = run_scenario(s);
  REQUIRE(result.metrics.size() == 3);
  for (const PairMetrics& m : result.metrics) {
    CHECK(m.max_vrel > 1e-3);  // the injected slip registers
    REQUIRE(m.rejection_time.has_value());
    CHECK(*m.rejection_time <= 0.04);
    CHECK(m.contraction_warnings == 0);
  }
}

TEST_CASE("every bundled scenario validates and completes") {
  for (const auto& builtin : builtin_scenarios()) {
    CAPTURE(builtin.name);
    const auto t0 = std::chrono::steady_clock::now();
    const Scenario s = load_scenario(builtin.name);
    const RunResult result = run_scenario(s);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(elapsed < 60.0);
    CHECK(result.metrics.size() == s.contacts.size());
  }
}

TEST_CASE("summary json names every metric") {
  Scenario s = load_scenario("corollary_sphere");
  s.step = 1e-3;
  const RunResult result = run_scenario(s);
  const std::string json = summary_json(result, 42);
  CHECK(json.find("\"scenario\": \"corollary_sphere\"") != std::string::npos);
  CHECK(json.find("\"seed\": 42") != std::string::npos);
  CHECK(json.find("max_geodesic_residual") != std::string::npos);
}
