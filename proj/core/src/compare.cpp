// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include "mecalog/compare.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mecalog/error.hpp"

namespace mecalog
{

using nlohmann::json;

void RobotSpec::validate() const
{
  for (double v : {payload, length, width, min_height, max_height, maneuverability}) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorCode::InvalidSpec, "robot '" + name + "': attributes must be positive");
    }
  }
  if (max_height < min_height) {
    throw Error(ErrorCode::InvalidSpec, "robot '" + name + "': HMx must be >= HMn");
  }
}

std::string_view to_string(NormScheme s)
{
  return s == NormScheme::MinMax ? "minmax" : "maxdivide";
}

NormScheme scheme_from_string(std::string_view s)
{
  std::string lower(s);
  std::transform(lower.begin(), lower.end(), lower.begin(),
    [](unsigned char c) {return static_cast<char>(std::tolower(c));});
  if (lower == "minmax") {
    return NormScheme::MinMax;
  }
  if (lower == "maxdivide") {
    return NormScheme::MaxDivide;
  }
  throw Error(ErrorCode::InvalidConfig, "unknown normalisation scheme '" + std::string(s) + "'");
}

AttributeVector transform_attributes(const RobotSpec & spec)
{
  if (spec.length == 0.0 || spec.width == 0.0 || spec.min_height == 0.0) {
    throw Error(ErrorCode::InvalidSpec, "robot '" + spec.name + "': zero L, W or HMn");
  }
  return {
    spec.payload, 1.0 / spec.length, 1.0 / spec.width, 1.0 / spec.min_height,
    spec.max_height, spec.maneuverability};
}

std::vector<AttributeVector> normalize(std::span<const AttributeVector> rows, NormScheme scheme)
{
  if (rows.size() < 2) {
    throw Error(ErrorCode::InsufficientData, "normalisation needs at least two robots");
  }
  std::vector<AttributeVector> out(rows.size());
  for (std::size_t col = 0; col < 6; ++col) {
    double lo = rows[0][col];
    double hi = rows[0][col];
    for (const auto & r : rows) {
      lo = std::min(lo, r[col]);
      hi = std::max(hi, r[col]);
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double x = rows[i][col];
      if (scheme == NormScheme::MinMax) {
        out[i][col] = hi == lo ? 0.5 : (x - lo) / (hi - lo);
      } else {
        out[i][col] = x / hi;
      }
    }
  }
  return out;
}

bool has_degenerate_column(std::span<const AttributeVector> rows)
{
  if (rows.empty()) {
    return false;
  }
  for (std::size_t col = 0; col < 6; ++col) {
    const bool constant = std::all_of(rows.begin(), rows.end(),
        [&](const AttributeVector & r) {return r[col] == rows[0][col];});
    if (constant) {
      return true;
    }
  }
  return false;
}

double score(const AttributeVector & a)
{
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    area += 0.5 * (a[i] + a[i + 1]);
  }
  return area;
}

std::vector<ScoreRow> score_table(std::span<const RobotSpec> specs, NormScheme scheme)
{
  std::vector<AttributeVector> raw;
  raw.reserve(specs.size());
  for (const RobotSpec & s : specs) {
    s.validate();
    raw.push_back(transform_attributes(s));
  }
  const auto norm = normalize(raw, scheme);

  std::vector<ScoreRow> rows;
  rows.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) {
    rows.push_back({specs[i].name, norm[i], score(norm[i])});
  }
  return rows;
}

std::vector<std::pair<std::string, double>> rank(
  std::span<const RobotSpec> specs, NormScheme scheme)
{
  std::vector<std::pair<std::string, double>> out;
  for (const ScoreRow & r : score_table(specs, scheme)) {
    out.emplace_back(r.name, r.score);
  }
  std::sort(out.begin(), out.end(), [](const auto & a, const auto & b) {
      if (a.second != b.second) {
        return a.second > b.second;
      }
      return a.first < b.first;
    });
  return out;
}

std::vector<RobotSpec> parse_spec_table_json(std::string_view text)
{
  std::vector<RobotSpec> out;
  try {
    const json j = json::parse(text);
    const json & rows = j.is_object() ? j.at("robots") : j;
    if (!rows.is_array()) {
      throw Error(ErrorCode::InvalidSpec, "robot table must be a JSON array");
    }
    for (const json & r : rows) {
      RobotSpec s;
      s.name = r.at("name").get<std::string>();
      s.payload = r.at("P").get<double>();
      s.length = r.at("L").get<double>();
      s.width = r.at("W").get<double>();
      s.min_height = r.at("HMn").get<double>();
      s.max_height = r.at("HMx").get<double>();
      s.maneuverability = r.at("M").get<double>();
      out.push_back(std::move(s));
    }
  } catch (const json::exception & e) {
    throw Error(ErrorCode::InvalidSpec, std::string("malformed robot table: ") + e.what());
  }
  return out;
}

std::vector<RobotSpec> parse_spec_table_csv(std::string_view text)
{
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<RobotSpec> out;
  bool header = true;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (header) {
      if (line != "name,P,L,W,HMn,HMx,M") {
        throw Error(ErrorCode::InvalidSpec, "robot CSV header must be name,P,L,W,HMn,HMx,M");
      }
      header = false;
      continue;
    }
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      cells.push_back(cell);
    }
    if (cells.size() != 7) {
      throw Error(
        ErrorCode::InvalidSpec, "robot CSV line " + std::to_string(line_no) + ": expected 7 fields");
    }
    try {
      out.push_back({cells[0], std::stod(cells[1]), std::stod(cells[2]), std::stod(cells[3]),
          std::stod(cells[4]), std::stod(cells[5]), std::stod(cells[6])});
    } catch (const std::exception &) {
      throw Error(
        ErrorCode::InvalidSpec, "robot CSV line " + std::to_string(line_no) + ": bad number");
    }
  }
  return out;
}

std::vector<RobotSpec> load_spec_table(const std::string & path)
{
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::IoError, "cannot open robot table '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const bool csv = path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0;
  return csv ? parse_spec_table_csv(buf.str()) : parse_spec_table_json(buf.str());
}

void write_normalized_csv(std::ostream & os, std::span<const ScoreRow> rows)
{
  os << "name";
  for (auto n : kAttributeNames) {
    os << ',' << n;
  }
  os << ",score\n";
  const auto old_prec = os.precision(17);
  for (const ScoreRow & r : rows) {
    os << r.name;
    for (double v : r.normalized) {
      os << ',' << v;
    }
    os << ',' << r.score << '\n';
  }
  os.precision(old_prec);
}

std::string ranking_to_json(
  std::span<const std::pair<std::string, double>> ranking, NormScheme scheme)
{
  json rows = json::array();
  for (std::size_t i = 0; i < ranking.size(); ++i) {
    rows.push_back({{"rank", i + 1}, {"name", ranking[i].first}, {"score", ranking[i].second}});
  }
  return json{{"scheme", std::string(to_string(scheme))}, {"ranking", rows}}.dump(2);
}

}  // namespace mecalog
