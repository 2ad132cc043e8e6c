// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "fracmod/errors.hpp"
#include "fracmod/io.hpp"
#include "support.hpp"

using namespace fracmod;

TEST_CASE("number formatting round-trips") {
  fracmod::test::Gen g(1);
  for (int i = 0; i < 200; ++i) {
    const double v = g.uniform(-1.0, 1.0) * std::pow(10.0, g.integer(-300, 300));
    CHECK(parse_double(format_double(v)) == v);
  }
  CHECK(format_double(kInf) == "inf");
  CHECK(format_double(-kInf) == "-inf");
  CHECK(format_double(std::nan("")) == "nan");
  CHECK(std::isinf(parse_p("inf")));
  CHECK(std::isinf(parse_p("Infinity")));
  CHECK(parse_p("0.5") == 0.5);
  CHECK_THROWS_AS(parse_p("0"), InvalidArgument);
  CHECK_THROWS_AS(parse_p("-1"), InvalidArgument);
  CHECK_THROWS_AS(parse_double("2x"), InvalidArgument);
  CHECK_THROWS_AS(parse_double(""), InvalidArgument);
}

TEST_CASE("function specs") {
  CHECK(parse_function_spec("exp:3").f == TrigPoly::exponential(3));
  CHECK(parse_function_spec("exp:-2").f == TrigPoly::exponential(-2));
  CHECK(parse_function_spec("random:8:5").f == corpus(CorpusKind::random_smooth, 8, 5));
  CHECK(parse_function_spec("sawtooth:16").f == corpus(CorpusKind::sawtooth_truncated, 16));
  CHECK(parse_function_spec("abssin:4").f == corpus(CorpusKind::abs_sin_truncated, 4));
  CHECK(parse_function_spec("const").f == TrigPoly::constant(1.0));
  CHECK(parse_function_spec("const:2.5").f == TrigPoly::constant(2.5));
  CHECK(parse_function_spec("exp:3").id == "exp:3");
  for (const char* bad : {"", "exp", "exp:", "exp:1:2", "random:8", "sawtooth:-1", "gauss:3", "exp:1.5", "random:a:1"})
    CHECK_THROWS_AS(parse_function_spec(bad), InvalidArgument);
}

TEST_CASE("equivalence CSV parses back losslessly") {
  EquivRow r;
  r.fid = "random:8:1";
  r.beta = 2.5;
  r.alpha = 0.5;
  r.h = 0.05;
  r.p = kInf;
  r.omega = 0.1234567890123456789;
  r.w = 1.0 / 3.0;
  r.omega_tilde = 1e-300;
  r.omega_star = 2.0;
  r.r_w = kInf;
  r.r_tilde = std::nan("");
  r.r_star = 7.0;
  std::ostringstream os;
  write_equiv_csv(os, {r, r});
  std::istringstream is(os.str());
  std::string line;
  std::getline(is, line);
  CHECK(line == kEquivHeader);
  int rows = 0;
  while (std::getline(is, line)) {
    const auto f = split_csv_line(line);
    REQUIRE(f.size() == 12);
    CHECK(f[0] == r.fid);
    const double vals[] = {r.beta, r.alpha, r.h, r.p, r.omega, r.w, r.omega_tilde, r.omega_star, r.r_w, r.r_tilde, r.r_star};
    for (int i = 0; i < 11; ++i) {
      const double back = parse_double(f[i + 1] == "nan" ? "0" : f[i + 1]);
      if (std::isnan(vals[i])) CHECK(f[i + 1] == "nan");
      else CHECK(back == vals[i]);
    }
    ++rows;
  }
  CHECK(rows == 2);
  CHECK(split_csv_line("a,\"b,c\",\"d\"\"e\"") == std::vector<std::string>{"a", "b,c", "d\"e"});
}

TEST_CASE("equivalence JSON uses null for non-finite values and sorted keys") {
  EquivRow r;
  r.fid = "exp:1";
  r.r_tilde = kInf;
  const std::string js = equiv_json({r});
  CHECK(js.find("\"r_tilde\": null") != std::string::npos);
  CHECK(js.find("\"infinite_ratio\": true") != std::string::npos);
  CHECK(js.find("\"alpha\"") < js.find("\"beta\""));
  CHECK(js.find("\"w\"") > js.find("\"r_w\""));
}

TEST_CASE("zero registry round trip") {
  ZeroRecord a;
  a.beta_k = 4.843171446258202;
  a.t_k = 8.478812720600018;
  a.residual = 1.5855679834925498e-10;
  a.bracket = {4.84, 4.85, 8.47, 8.48};
  a.branch_index = -1;
  const std::string js = zeros_json({a, a});
  const auto back = parse_zeros_json(js);
  REQUIRE(back.size() == 2);
  CHECK(back[1].beta_k == a.beta_k);
  CHECK(back[1].t_k == a.t_k);
  CHECK(back[1].residual == a.residual);
  CHECK(back[1].bracket == a.bracket);
  CHECK(back[1].branch_index == -1);
  CHECK(zeros_json({}) == "[]\n");
  CHECK_THROWS_AS(parse_zeros_json("{\"records\": []}"), InvalidArgument);
  CHECK_THROWS_AS(parse_zeros_json("[{\"beta\": 1}]"), InvalidArgument);
  CHECK_THROWS_AS(parse_zeros_json("not json"), InvalidArgument);
}

TEST_CASE("curve CSV") {
  std::ostringstream os;
  write_curve_csv(os, {{0.5, 1.0, 2.0, 4.0}, {1.0, 0.0, -0.25, 4.0}});
  CHECK(os.str() == "beta,t,x,y\n4,0.5,1,2\n4,1,0,-0.25\n");
}

TEST_CASE("file helpers") {
  CHECK_THROWS_AS(write_file("/nonexistent-dir/x.csv", "a"), IoFailure);
  CHECK_THROWS_AS(read_file("/nonexistent-dir/x.csv"), IoFailure);
}
