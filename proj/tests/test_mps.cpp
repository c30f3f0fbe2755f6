// Copyright 2026 The optlp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <Eigen/Dense>
#include <algorithm>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "optlp/errors.hpp"
#include "optlp/mps.hpp"
#include "optlp/synthetic.hpp"

using optlp::Index;

namespace {

const char* kMinimal = R"(NAME          TINY
ROWS
 N  COST
 E  LIM
COLUMNS
    X1        COST         1.0   LIM          1.0
    X2        COST         2.0
RHS
    RHS       LIM          3.0
ENDATA
)";

std::string with_rows(const std::string& rows, const std::string& columns,
                      const std::string& rhs, const std::string& extra = "") {
  return "NAME T\nROWS\n N  OBJ\n" + rows + "COLUMNS\n" + columns + "RHS\n" + rhs + extra +
         "ENDATA\n";
}

int line_of(const std::string& text) {
  try {
    (void)optlp::parse_mps_string(text);
  } catch (const optlp::ParseError& e) {
    return int(e.line());
  }
  return -1;
}

}  // namespace

TEST_CASE("minimal file with one equality row") {
  const auto p = optlp::parse_mps_string(kMinimal);
  CHECK(p.name == "TINY");
  REQUIRE(p.rows.size() == 2);
  CHECK(p.rows[0] == optlp::MpsRow{"COST", optlp::RowKind::objective});
  CHECK(p.rows[1] == optlp::MpsRow{"LIM", optlp::RowKind::eq});
  CHECK(p.columns == std::vector<std::string>{"X1", "X2"});
  REQUIRE(p.coefficients.size() == 3);
  const auto in_lim = std::count_if(p.coefficients.begin(), p.coefficients.end(),
                                    [](const auto& c) { return c.row == "LIM"; });
  CHECK(in_lim == 1);
  CHECK(p.rhs == std::vector<optlp::MpsRhs>{{"LIM", 3.0}});
  CHECK(p.objective_row().name == "COST");
}

TEST_CASE("column entries of a one-row problem") {
  const auto p = optlp::parse_mps_string(with_rows(" E  R\n", "    X  R  1\n    Y  R  1\n",
                                                   "    RHS  R  1\n"));
  CHECK(p.coefficients.size() == 2);
}

TEST_CASE("fixed-column layout with names containing spaces") {
  // fields start at columns 2, 5, 15, 25, 40 and 50
  const auto line = [](std::initializer_list<std::string> fields) {
    static constexpr std::size_t kStart[] = {1, 4, 14, 24, 39, 49};
    std::string out;
    std::size_t k = 0;
    for (const auto& f : fields) {
      out.resize(kStart[k++], ' ');
      out += f;
    }
    return out + "\n";
  };
  const std::string text = "NAME          FIXED\nROWS\n" + line({"N", "COST"}) +
                           line({"L", "ROW A"}) + "COLUMNS\n" +
                           line({"", "COL 1", "COST", "2.", "ROW A", "3."}) + "RHS\n" +
                           line({"", "RHS", "ROW A", "6."}) + "ENDATA\n";
  const auto p = optlp::parse_mps_string(text);
  REQUIRE(p.rows.size() == 2);
  CHECK(p.rows[1].name == "ROW A");
  CHECK(p.columns == std::vector<std::string>{"COL 1"});
  REQUIRE(p.coefficients.size() == 2);
  CHECK(p.coefficients[1] == optlp::MpsCoefficient{"COL 1", "ROW A", 3.0});
  CHECK(p.rhs == std::vector<optlp::MpsRhs>{{"ROW A", 6.0}});
}

TEST_CASE("comments, blank lines and CRLF endings are ignored") {
  std::string text = "* leading comment\r\n";
  for (char c : std::string(kMinimal)) {
    if (c == '\n') text += "\r\n";
    else text += c;
  }
  text.insert(text.find("COLUMNS"), "* inside\r\n\r\n");
  const auto p = optlp::parse_mps_string(text);
  CHECK(p == optlp::parse_mps_string(kMinimal));
}

TEST_CASE("RANGES and integrality markers are unsupported") {
  const std::string ranges = with_rows(" L  R\n", "    X  R  1\n", "    RHS  R  1\n",
                                       "RANGES\n    RNG  R  2\n");
  CHECK_THROWS_AS(optlp::parse_mps_string(ranges), optlp::UnsupportedFeature);
  const std::string marker =
      with_rows(" L  R\n", "    M  'MARKER'  'INTORG'\n    X  R  1\n", "    RHS  R  1\n");
  CHECK_THROWS_AS(optlp::parse_mps_string(marker), optlp::UnsupportedFeature);
}

TEST_CASE("parse errors carry the line number") {
  CHECK(line_of("NAME X\nROWS\n N  OBJ\nSECTIONX\nENDATA\n") == 4);
  // duplicate coefficient of X in row R
  CHECK(line_of(with_rows(" E  R\n", "    X  R  1\n    X  R  2\n", "")) == 7);
  CHECK(line_of(with_rows(" E  R\n", "    X  Q  1\n", "")) == 6);
  CHECK(line_of(with_rows(" E  R\n", "    X  R  1.0.0\n", "")) == 6);
  CHECK(line_of(with_rows(" Z  R\n", "    X  R  1\n", "")) == 4);
  CHECK(line_of("NAME X\nROWS\n N  A\n N  B\nENDATA\n") == 4);
  CHECK(line_of("NAME X\nROWS\n E  A\nENDATA\n") >= 1);
  try {
    (void)optlp::parse_mps_string("NAME X\nROWS\n N  OBJ\nSECTIONX\n");
  } catch (const optlp::ParseError& e) {
    CHECK(std::string(e.what()).rfind("line 4:", 0) == 0);
  }
}

TEST_CASE("bounds section") {
  const std::string cols = "    X  OBJ  1  R  1\n    Y  OBJ  1  R  1\n";
  auto p = optlp::parse_mps_string(
      with_rows(" E  R\n", cols, "    RHS  R  1\n", "BOUNDS\n LO BND  X  0\n PL BND  Y\n"));
  REQUIRE(p.bounds.size() == 2);
  CHECK(p.bounds[0] == optlp::MpsBound{"LO", "X", 0.0});
  CHECK(p.bounds[1] == optlp::MpsBound{"PL", "Y", 0.0});
  CHECK_NOTHROW(optlp::to_standard_form(p));

  for (const char* b : {" UP BND  X  4\n", " FR BND  X\n", " LO BND  X  1\n", " MI BND  X\n",
                        " FX BND  X  2\n"}) {
    p = optlp::parse_mps_string(with_rows(" E  R\n", cols, "    RHS  R  1\n",
                                          std::string("BOUNDS\n") + b));
    CHECK_THROWS_AS(optlp::to_standard_form(p), optlp::UnsupportedFeature);
  }
  CHECK(line_of(with_rows(" E  R\n", cols, "", "BOUNDS\n UP BND  Z  4\n")) == 10);
  CHECK(line_of(with_rows(" E  R\n", cols, "", "BOUNDS\n XX BND  X  4\n")) == 10);
}

TEST_CASE("an L row gains a +1 slack with zero cost") {
  const auto sf = optlp::to_standard_form(optlp::parse_mps_string(
      with_rows(" L  CAP\n", "    X1  OBJ  -1  CAP  1\n    X2  OBJ  -2  CAP  1\n",
                "    RHS  CAP  4\n")));
  const auto& lp = sf.lp;
  REQUIRE(lp.m() == 1);
  REQUIRE(lp.n() == 3);
  CHECK(lp.a()(0, 0) == 1.0);
  CHECK(lp.a()(0, 1) == 1.0);
  CHECK(lp.a()(0, 2) == 1.0);
  CHECK(lp.b()(0) == 4.0);
  CHECK(lp.c()(2) == 0.0);
  CHECK(sf.colmap.structural == 2);
  CHECK(sf.colmap.names[2] == "CAP_slack");
  CHECK(sf.colmap.at("X2") == 1);
  CHECK_THROWS_AS(sf.colmap.at("NOPE"), optlp::InvalidInput);
}

TEST_CASE("a G row is negated so its slack enters with +1") {
  const auto sf = optlp::to_standard_form(optlp::parse_mps_string(
      with_rows(" G  LOW\n", "    X1  OBJ  1  LOW  1\n    X2  OBJ  1\n", "    RHS  LOW  1\n")));
  const auto& lp = sf.lp;
  REQUIRE(lp.n() == 3);
  // -x1 + z = -1 with z >= 0 is x1 >= 1
  CHECK(lp.a()(0, 0) == -1.0);
  CHECK(lp.a()(0, 1) == 0.0);
  CHECK(lp.a()(0, 2) == 1.0);
  CHECK(lp.b()(0) == -1.0);
}

TEST_CASE("objective constant from the objective row RHS") {
  const auto sf = optlp::to_standard_form(optlp::parse_mps_string(
      with_rows(" E  R\n", "    X  OBJ  1  R  1\n    Y  R  1\n", "    RHS  R  1  OBJ  2.5\n")));
  CHECK(sf.objective_offset == -2.5);
  CHECK(sf.lp.b()(0) == 1.0);
}

TEST_CASE("AFIRO parses with its published dimensions") {
  const auto p = optlp::parse_mps_file(std::filesystem::path(OPTLP_DATA_DIR) / "netlib/afiro.mps");
  CHECK(p.rows.size() == 28);  // 27 constraints and the objective
  CHECK(p.columns.size() == 32);
  CHECK(p.coefficients.size() == 88);
  const auto sf = optlp::to_standard_form(p);
  const auto le = std::count_if(p.rows.begin(), p.rows.end(),
                                [](const auto& r) { return r.kind == optlp::RowKind::le; });
  CHECK(sf.lp.m() == 27);
  CHECK(sf.lp.n() == 32 + le);
}

TEST_CASE("writer round trips parsed problems") {
  const auto p = optlp::parse_mps_string(with_rows(
      " L  A\n G  B\n E  C\n", "    X  OBJ  1.5  A  1\n    X  B  -2e-7\n    Y  C  3\n    Z  A  1\n",
      "    RHS  A  4  B  -1\n    RHS  C  0.1\n"));
  const std::string text = optlp::write_mps(p);
  const auto q = optlp::parse_mps_string(text);
  CHECK(q == p);
  CHECK(optlp::write_mps(q) == text);
}

TEST_CASE("synthetic instances survive the MPS round trip exactly") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto inst = optlp::generate_synthetic<double>(12, 5, seed);
    const std::string text = optlp::write_mps(optlp::to_mps_problem(inst.lp));
    const auto parsed = optlp::parse_mps_string(text);
    CHECK(optlp::write_mps(parsed) == text);
    const auto sf = optlp::to_standard_form(parsed);
    CHECK(sf.lp.a() == inst.lp.a());
    CHECK(sf.lp.b() == inst.lp.b());
    CHECK(sf.lp.c() == inst.lp.c());
    CHECK(sf.lp.name() == inst.lp.name());
    const auto res = optlp::residuals(sf.lp, inst.start);
    CHECK(res.primal <= 1e-14);
    CHECK(res.dual <= 1e-14);
  }
}
