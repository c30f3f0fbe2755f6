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

#include "optlp/mps.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "optlp/errors.hpp"
#include "optlp/format.hpp"

namespace optlp {

namespace {

enum class Section { none, name, rows, columns, rhs, bounds, endata };

std::vector<std::string> split_ws(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Fixed-layout fields (1-based columns 2-3, 5-12, 15-22, 25-36, 40-47, 50-61).
std::vector<std::string> fixed_fields(std::string_view line) {
  static constexpr std::pair<std::size_t, std::size_t> kFields[] = {
      {1, 2}, {4, 8}, {14, 8}, {24, 12}, {39, 8}, {49, 12}};
  std::vector<std::string> out;
  for (auto [start, len] : kFields) {
    if (start >= line.size()) break;
    out.push_back(trim(line.substr(start, len)));
  }
  while (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

double number(const std::string& token, std::size_t line) {
  double v = 0;
  if (!parse_number(token, v)) throw ParseError("malformed number '" + token + "'", line);
  return v;
}

bool bound_has_value(const std::string& kind) {
  return kind == "UP" || kind == "LO" || kind == "FX" || kind == "LI" || kind == "UI" ||
         kind == "SC";
}

bool known_bound(const std::string& kind) {
  return bound_has_value(kind) || kind == "FR" || kind == "MI" || kind == "PL" || kind == "BV";
}

class Parser {
 public:
  MpsProblem run(std::istream& in) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.pop_back();
      if (raw.empty() || raw.front() == '*') continue;
      if (trim(raw).empty()) continue;
      if (!std::isspace(static_cast<unsigned char>(raw.front()))) {
        header(raw);
        if (section_ == Section::endata) break;
        continue;
      }
      data(raw);
    }
    if (objective_.empty()) throw ParseError("no objective (N) row declared", line_);
    return std::move(p_);
  }

 private:
  void header(const std::string& raw) {
    const auto tok = split_ws(raw);
    const std::string key = upper(tok.front());
    if (key == "NAME") {
      section_ = Section::name;
      p_.name = tok.size() > 1 ? trim(std::string_view(raw).substr(raw.find(tok[0]) + 4)) : "";
    } else if (key == "ROWS") {
      section_ = Section::rows;
    } else if (key == "COLUMNS") {
      section_ = Section::columns;
    } else if (key == "RHS") {
      section_ = Section::rhs;
    } else if (key == "BOUNDS") {
      section_ = Section::bounds;
    } else if (key == "ENDATA") {
      section_ = Section::endata;
    } else if (key == "RANGES") {
      throw UnsupportedFeature("line " + std::to_string(line_) +
                               ": RANGES section is not supported");
    } else {
      throw ParseError("unknown section '" + tok.front() + "'", line_);
    }
  }

  void data(const std::string& raw) {
    switch (section_) {
      case Section::rows: row(raw); break;
      case Section::columns: column(raw); break;
      case Section::rhs: rhs(raw); break;
      case Section::bounds: bound(raw); break;
      default: throw ParseError("data line outside of a section", line_);
    }
  }

  void row(const std::string& raw) {
    auto tok = split_ws(raw);
    if (tok.size() != 2) tok = fixed_fields(raw);
    if (tok.size() != 2 || tok[1].empty()) throw ParseError("ROWS entry needs kind and name", line_);
    const std::string kind = upper(tok[0]);
    RowKind rk;
    if (kind == "N") rk = RowKind::objective;
    else if (kind == "E") rk = RowKind::eq;
    else if (kind == "L") rk = RowKind::le;
    else if (kind == "G") rk = RowKind::ge;
    else throw ParseError("unknown row kind '" + tok[0] + "'", line_);
    if (rows_.count(tok[1])) throw ParseError("duplicate row '" + tok[1] + "'", line_);
    if (rk == RowKind::objective) {
      if (!objective_.empty()) throw ParseError("more than one objective (N) row", line_);
      objective_ = tok[1];
    }
    rows_.insert(tok[1]);
    p_.rows.push_back({tok[1], rk});
  }

  bool pairs_known(const std::vector<std::string>& t, std::size_t first) const {
    for (std::size_t k = first; k + 1 < t.size(); k += 2)
      if (!rows_.count(t[k])) return false;
    return true;
  }

  // Free layout unless it does not fit and the fixed field positions do.
  template <typename Fits>
  std::vector<std::string> pick_layout(const std::string& raw, Fits fits) const {
    auto tok = split_ws(raw);
    if (fits(tok)) return tok;
    auto fixed = fixed_fields(raw);
    if (!fixed.empty() && fixed[0].empty()) fixed.erase(fixed.begin());
    return fits(fixed) ? fixed : tok;
  }

  void require_row(const std::string& name) const {
    if (!rows_.count(name)) throw ParseError("undeclared row '" + name + "'", line_);
  }

  void column(const std::string& raw) {
    if (raw.find("'MARKER'") != std::string::npos)
      throw UnsupportedFeature("line " + std::to_string(line_) +
                               ": integrality markers are not supported");
    auto tok = pick_layout(raw, [this](const std::vector<std::string>& t) {
      return (t.size() == 3 || t.size() == 5) && pairs_known(t, 1);
    });
    if (tok.size() != 3 && tok.size() != 5)
      throw ParseError("COLUMNS entry needs column and 1 or 2 (row, value) pairs", line_);
    const std::string& col = tok[0];
    if (columns_.insert(col).second) p_.columns.push_back(col);
    for (std::size_t k = 1; k + 1 < tok.size(); k += 2) {
      require_row(tok[k]);
      if (!pairs_.insert(col + '\x1f' + tok[k]).second)
        throw ParseError("duplicate coefficient for column '" + col + "' in row '" + tok[k] + "'",
                         line_);
      p_.coefficients.push_back({col, tok[k], number(tok[k + 1], line_)});
    }
  }

  void rhs(const std::string& raw) {
    auto tok = pick_layout(raw, [this](const std::vector<std::string>& t) {
      return t.size() >= 2 && t.size() <= 5 && pairs_known(t, t.size() % 2);
    });
    if (tok.size() < 2 || tok.size() > 5) throw ParseError("malformed RHS entry", line_);
    const std::size_t first = tok.size() % 2;  // odd count: leading set name
    for (std::size_t k = first; k + 1 < tok.size(); k += 2) {
      require_row(tok[k]);
      if (!rhs_rows_.insert(tok[k]).second)
        throw ParseError("duplicate RHS for row '" + tok[k] + "'", line_);
      p_.rhs.push_back({tok[k], number(tok[k + 1], line_)});
    }
  }

  void bound(const std::string& raw) {
    auto tok = split_ws(raw);
    if (tok.empty()) return;
    std::string kind = upper(tok[0]);
    if (!known_bound(kind)) throw ParseError("unknown bound kind '" + tok[0] + "'", line_);
    const bool valued = bound_has_value(kind);
    std::string col;
    std::string value;
    if (valued && tok.size() == 4) { col = tok[2]; value = tok[3]; }
    else if (valued && tok.size() == 3) { col = tok[1]; value = tok[2]; }
    else if (!valued && tok.size() == 3) { col = tok[2]; }
    else if (!valued && tok.size() == 2) { col = tok[1]; }
    else if (!valued && kind == "BV" && tok.size() == 4) { col = tok[2]; value = tok[3]; }
    else {
      const auto f = fixed_fields(raw);
      if (f.size() < 3) throw ParseError("malformed BOUNDS entry", line_);
      col = f[2];
      if (f.size() > 3) value = f[3];
    }
    if (!columns_.count(col)) throw ParseError("bound on undeclared column '" + col + "'", line_);
    p_.bounds.push_back({kind, col, value.empty() ? 0.0 : number(value, line_)});
  }

  MpsProblem p_;
  Section section_ = Section::none;
  std::size_t line_ = 0;
  std::string objective_;
  std::unordered_set<std::string> rows_;
  std::unordered_set<std::string> columns_;
  std::unordered_set<std::string> pairs_;
  std::unordered_set<std::string> rhs_rows_;
};

}  // namespace

const MpsRow& MpsProblem::objective_row() const {
  for (const auto& r : rows)
    if (r.kind == RowKind::objective) return r;
  throw InvalidInput("MpsProblem: no objective row");
}

MpsProblem parse_mps(std::istream& in) { return Parser().run(in); }

MpsProblem parse_mps_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_mps(in);
}

MpsProblem parse_mps_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return parse_mps(in);
}

std::string write_mps(const MpsProblem& p) {
  std::ostringstream out;
  out << "NAME          " << p.name << '\n' << "ROWS\n";
  for (const auto& r : p.rows) {
    const char* kind = r.kind == RowKind::objective ? "N"
                       : r.kind == RowKind::eq      ? "E"
                       : r.kind == RowKind::le      ? "L"
                                                    : "G";
    out << ' ' << kind << "  " << r.name << '\n';
  }
  out << "COLUMNS\n";
  std::unordered_set<std::string> written;
  for (const auto& c : p.coefficients) {
    written.insert(c.column);
    out << "    " << c.column << "  " << c.row << "  " << format_number(c.value) << '\n';
  }
  // A column without entries is declared through a zero objective coefficient.
  const std::string& obj = p.objective_row().name;
  for (const auto& col : p.columns)
    if (!written.count(col)) out << "    " << col << "  " << obj << "  0\n";
  if (!p.rhs.empty()) {
    out << "RHS\n";
    for (const auto& r : p.rhs) out << "    RHS  " << r.row << "  " << format_number(r.value) << '\n';
  }
  if (!p.bounds.empty()) {
    out << "BOUNDS\n";
    for (const auto& b : p.bounds) {
      out << ' ' << b.kind << " BND  " << b.column;
      if (bound_has_value(b.kind) || b.value != 0.0) out << "  " << format_number(b.value);
      out << '\n';
    }
  }
  out << "ENDATA\n";
  return out.str();
}

Index ColumnMap::at(const std::string& name) const {
  const auto it = index.find(name);
  if (it == index.end()) throw InvalidInput("unknown column '" + name + "'");
  return it->second;
}

StandardForm to_standard_form(const MpsProblem& p) {
  for (const auto& b : p.bounds) {
    const bool default_bound = (b.kind == "LO" && b.value == 0.0) || b.kind == "PL";
    if (!default_bound)
      throw UnsupportedFeature("unsupported bound " + b.kind + " on column '" + b.column +
                               "' (only x >= 0 is supported)");
  }

  ColumnMap colmap;
  for (const auto& c : p.columns) {
    colmap.index.emplace(c, static_cast<Index>(colmap.names.size()));
    colmap.names.push_back(c);
  }
  colmap.structural = static_cast<Index>(colmap.names.size());

  std::unordered_map<std::string, Index> row_index;
  std::vector<std::string> row_names;
  std::vector<RowKind> kinds;
  for (const auto& r : p.rows) {
    if (r.kind == RowKind::objective) continue;
    row_index.emplace(r.name, static_cast<Index>(row_names.size()));
    row_names.push_back(r.name);
    kinds.push_back(r.kind);
  }
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (kinds[i] == RowKind::eq) continue;
    const std::string slack = row_names[i] + "_slack";
    if (colmap.index.count(slack))
      throw InvalidInput("slack name '" + slack + "' collides with a column");
    colmap.index.emplace(slack, static_cast<Index>(colmap.names.size()));
    colmap.names.push_back(slack);
  }

  const Index m = static_cast<Index>(row_names.size());
  const Index n = static_cast<Index>(colmap.names.size());
  Matrix<double> a = Matrix<double>::Zero(m, n);
  Vector<double> b = Vector<double>::Zero(m);
  Vector<double> c = Vector<double>::Zero(n);
  const std::string& obj = p.objective_row().name;
  double offset = 0;

  for (const auto& e : p.coefficients) {
    const Index j = colmap.at(e.column);
    if (e.row == obj) {
      c(j) = e.value;
    } else {
      a(row_index.at(e.row), j) = e.value;
    }
  }
  for (const auto& r : p.rhs) {
    if (r.row == obj) offset = -r.value;
    else b(row_index.at(r.row)) = r.value;
  }
  Index slack = colmap.structural;
  for (Index i = 0; i < m; ++i) {
    const RowKind k = kinds[static_cast<std::size_t>(i)];
    if (k == RowKind::eq) continue;
    if (k == RowKind::ge) {
      a.row(i) *= -1.0;
      b(i) = -b(i);
    }
    a(i, slack++) = 1.0;
  }

  auto lp = StandardLp<double>::create(std::move(a), std::move(b), std::move(c), p.name);
  std::vector<std::string> kept_names;
  {
    std::set<Index> dropped(lp.dropped_rows().begin(), lp.dropped_rows().end());
    for (Index i = 0; i < m; ++i)
      if (!dropped.count(i)) kept_names.push_back(row_names[static_cast<std::size_t>(i)]);
  }
  return {std::move(lp), std::move(colmap), std::move(kept_names), offset};
}

MpsProblem to_mps_problem(const StandardLp<double>& lp) {
  MpsProblem p;
  p.name = lp.name();
  p.rows.push_back({"COST", RowKind::objective});
  for (Index i = 0; i < lp.m(); ++i) p.rows.push_back({"R" + std::to_string(i + 1), RowKind::eq});
  for (Index j = 0; j < lp.n(); ++j) {
    const std::string col = "X" + std::to_string(j + 1);
    p.columns.push_back(col);
    if (lp.c()(j) != 0.0) p.coefficients.push_back({col, "COST", lp.c()(j)});
    for (Index i = 0; i < lp.m(); ++i)
      if (lp.a()(i, j) != 0.0) p.coefficients.push_back({col, "R" + std::to_string(i + 1), lp.a()(i, j)});
  }
  for (Index i = 0; i < lp.m(); ++i)
    if (lp.b()(i) != 0.0) p.rhs.push_back({"R" + std::to_string(i + 1), lp.b()(i)});
  return p;
}

}  // namespace optlp
