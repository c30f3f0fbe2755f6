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

#ifndef OPTLP_MPS_HPP_
#define OPTLP_MPS_HPP_

// MPS reader (fixed and free field layouts) and conversion to the standard
// form  min c^T x, Ax = b, x >= 0  through nonnegative slack columns.
//
// Supported sections: NAME, ROWS, COLUMNS, RHS, BOUNDS, ENDATA. RANGES,
// integrality markers and bounds other than the default x >= 0 are rejected.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "optlp/model.hpp"

namespace optlp {

enum class RowKind { objective, eq, le, ge };

struct MpsRow {
  std::string name;
  RowKind kind;
  bool operator==(const MpsRow&) const = default;
};

struct MpsCoefficient {
  std::string column;
  std::string row;
  double value;
  bool operator==(const MpsCoefficient&) const = default;
};

struct MpsRhs {
  std::string row;
  double value;
  bool operator==(const MpsRhs&) const = default;
};

struct MpsBound {
  std::string kind;  // upper-case MPS bound code: UP, LO, FX, FR, MI, PL, BV, ...
  std::string column;
  double value;      // 0 for kinds without a value
  bool operator==(const MpsBound&) const = default;
};

struct MpsProblem {
  std::string name;
  std::vector<MpsRow> rows;             // declaration order, objective included
  std::vector<std::string> columns;     // first-appearance order
  std::vector<MpsCoefficient> coefficients;
  std::vector<MpsRhs> rhs;
  std::vector<MpsBound> bounds;
  bool operator==(const MpsProblem&) const = default;

  const MpsRow& objective_row() const;
};

MpsProblem parse_mps(std::istream& in);
MpsProblem parse_mps_string(std::string_view text);
MpsProblem parse_mps_file(const std::filesystem::path& path);

// Free-format MPS text; parse_mps(write_mps(p)) == p for any parsed p.
std::string write_mps(const MpsProblem& p);

struct ColumnMap {
  std::vector<std::string> names;  // standard-form column names (slacks last)
  std::unordered_map<std::string, Index> index;
  Index structural = 0;            // columns taken from the MPS file

  Index at(const std::string& name) const;
};

struct StandardForm {
  StandardLp<double> lp;
  ColumnMap colmap;
  std::vector<std::string> row_names;  // rows of lp.a() (after any dependent-row drop)
  double objective_offset = 0;         // constant added to c^T x (from an objective RHS)
};

// 'le' rows gain a +1 slack; 'ge' rows are negated and gain a +1 slack, so
// every logical column enters with coefficient +1 and bound >= 0.
StandardForm to_standard_form(const MpsProblem& p);

// Equality-only MPS description of a standard-form problem (columns X1..Xn,
// rows R1..Rm, objective COST).
MpsProblem to_mps_problem(const StandardLp<double>& lp);

}  // namespace optlp

#endif  // OPTLP_MPS_HPP_
