#include <doctest.h>

#include <sstream>

#include "mops/plot.hpp"
#include "mops/verify.hpp"

using namespace mops;

TEST_CASE("parameter lists") {
  const auto v = parse_param_list("-5..-1,1..5");
  REQUIRE(v.size() == 10);
  CHECK(v.front() == Rational(-5));
  CHECK(v[4] == Rational(-1));
  CHECK(v[5] == Rational(1));
  CHECK(parse_param_list("1/2,3") == std::vector<Rational>{Rational(1, 2), Rational(3)});
  CHECK(parse_param_list("-1/2..3/2").size() == 3);
  CHECK_THROWS_AS(parse_param_list(""), Error);
  CHECK_THROWS_AS(parse_param_list("3..1"), Error);
  CHECK_THROWS_AS(parse_param_list("1,,2"), Error);
}

TEST_CASE("plot samples") {
  PlotConfig cfg;
  cfg.kind = PerturbationKind::translation;
  cfg.r = 5;
  cfg.params = parse_param_list("-5..-1,1..5");
  cfg.n = 17;
  const PlotData d = sample_plot(cfg);
  CHECK(d.columns.size() == 12);
  CHECK(d.x.size() == 601);
  CHECK(d.x.front() == -1.2);
  CHECK(d.x.back() == 1.2);
  const std::string csv = plot_csv(d);
  CHECK(csv.rfind("x,P_17,mu_5=-5,", 0) == 0);
  std::istringstream is(csv);
  int lines = 0;
  for (std::string l; std::getline(is, l);) ++lines;
  CHECK(lines == 602);
  const std::string svg = plot_svg(d, cfg);
  CHECK(svg == plot_svg(sample_plot(cfg), cfg));
  CHECK(svg.find("viewBox=\"0 0 800 500\"") != std::string::npos);
  CHECK(svg.find("class=\"neg\"") != std::string::npos);
  CHECK(svg.find("class=\"pos\"") != std::string::npos);
  CHECK(svg.find("class=\"zero\"") != std::string::npos);

  PlotConfig base;
  base.n = 0;
  const PlotData c = sample_plot(base);
  CHECK(c.columns == std::vector<std::string>{"x", "P_0"});
  for (double y : c.curves[0]) CHECK(y == 1.0);

  PlotConfig bad = base;
  bad.x_lo = 1;
  bad.x_hi = 1;
  CHECK_THROWS_AS(sample_plot(bad), Error);
  bad = base;
  bad.samples = 1;
  CHECK_THROWS_AS(sample_plot(bad), Error);
  CHECK(format_double(0.1) == "0.10000000000000001");
}

TEST_CASE("verify harness") {
  VerifyConfig cfg;
  cfg.suite = "linearization";
  cfg.r_max = 3;
  cfg.n_max = 5;
  const VerifyResult r = run_verify(cfg);
  CHECK(r.all_pass);
  CHECK(r.text == "linearization: 24 checks, 0 failed\nALL PASS\n");
  cfg.suite = "nope";
  CHECK_THROWS_AS(run_verify(cfg), Error);
  CHECK(suite_names().size() == 11);
}
