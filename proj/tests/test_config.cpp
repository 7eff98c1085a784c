#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "entangler/config.hpp"
#include "entangler/csv.hpp"
#include "entangler/errors.hpp"

using namespace entangler;

TEST_CASE("empty config yields all defaults") {
  const RunConfig cfg = parse_config("");
  CHECK(cfg.tau_max == doctest::Approx(2.0 * 3.141592653589793));
  CHECK(cfg.tau_points == 2001);
  CHECK(cfg.gamma_list == std::vector<double>{0.0, 0.001, 0.002, 0.01});
  CHECK(cfg.emit == std::set<Emit>{Emit::kFig2, Emit::kFig3});
  CHECK(cfg.physical.g == 1.0);
  CHECK(cfg.physical.delta == 20.0);
}

TEST_CASE("full config round trip") {
  const RunConfig cfg = parse_config(
      "# a comment\n"
      "tau_max = 12.5\n"
      "tau_points = 501\n"
      "tau_off = 1.0\n"
      "gamma_list = 0, 0.003\n"
      "output_path = results\n"
      "emit = couplings, protocol\n"
      "[physical]\n"
      "g = 2.0\n"
      "delta = 40\n"
      "kappa = 38\n"
      "eps = 1.0, 0.5+0.5i, -1i\n"
      "phi = 0.1, 0.2, 0.3\n"
      "gamma_laser = 1e-8\n"
      "gamma_spont = 1e-10\n"
      "nu = 0.08\n"
      "fiber_lengths = 1, 2, 3\n"
      "[thresholds]\n"
      "much_greater = 5\n");
  CHECK(cfg.tau_max == 12.5);
  CHECK(cfg.tau_points == 501);
  CHECK(cfg.gamma_list == std::vector<double>{0.0, 0.003});
  CHECK(cfg.output_path == "results");
  CHECK(cfg.emit == std::set<Emit>{Emit::kCouplings, Emit::kProtocol});
  CHECK(cfg.physical.eps[1] == cdouble(0.5, 0.5));
  CHECK(cfg.physical.eps[2] == cdouble(0.0, -1.0));
  CHECK(cfg.physical.fiber_lengths[2] == 3.0);
  CHECK(cfg.thresholds.much_greater == 5.0);
}

TEST_CASE("validation failures") {
  CHECK_THROWS_WITH_AS(parse_config("gamma_list = -1\n"),
                       "gamma_list: gamma_spont must be >= 0",
                       ValidationError);
  CHECK_THROWS_AS(parse_config("tau_points = 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("no_such_key = 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("[physical]\ng = -1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("[unknown]\nx = 1\n"), ValidationError);
  CHECK_THROWS_AS(parse_config("emit = fig4\n"), ValidationError);
}

TEST_CASE("parse errors carry line information") {
  try {
    parse_config("tau_max = 1.0\nbogus line without equals\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
  }
  CHECK_THROWS_AS(parse_config("tau_max = not_a_number\n"), ParseError);
  CHECK_THROWS_AS(parse_config("[physical\ng = 1\n"), ParseError);
}

TEST_CASE("tau grid spans [0, tau_max]") {
  RunConfig cfg = parse_config("tau_max = 4.0\ntau_points = 5\n");
  const auto grid = cfg.tau_grid();
  REQUIRE(grid.size() == 5);
  CHECK(grid.front() == 0.0);
  CHECK(grid.back() == 4.0);
  CHECK(grid[2] == doctest::Approx(2.0));
}

TEST_CASE("config hash is stable and content-sensitive") {
  const auto a = parse_config("tau_max = 1\n");
  const auto b = parse_config("tau_max = 1\n");
  const auto c = parse_config("tau_max = 2\n");
  CHECK(a.config_hash == b.config_hash);
  CHECK(a.config_hash != c.config_hash);
}

TEST_CASE("number formatting is fixed at 12 significant digits") {
  CHECK(format_number(8.0 / 9.0) == "0.888888888889");
  CHECK(format_number(0.0) == "0");
  CHECK(format_number(1.0) == "1");
  CHECK(csv_stamp(0x1234).find("config_hash=0000000000001234") !=
        std::string::npos);
}
