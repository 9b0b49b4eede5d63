// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mecalog
{

/// One row of the logistic-robot comparison table. Lengths in mm, payload in kg.
struct RobotSpec
{
  std::string name;
  double payload{0.0};     ///< P
  double length{0.0};      ///< L
  double width{0.0};       ///< W
  double min_height{0.0};  ///< HMn
  double max_height{0.0};  ///< HMx
  double maneuverability{0.0};  ///< M, DOF count

  /// Throws Error(InvalidSpec) unless all fields are positive and HMx >= HMn.
  void validate() const;
};

/// Plot abscissa order: P, 1/L, 1/W, 1/HMn, HMx, M. Smaller-is-better attributes
/// enter as reciprocals. The trapezoid score depends on this order.
using AttributeVector = std::array<double, 6>;

inline constexpr std::array<std::string_view, 6> kAttributeNames{
  "P", "inv_L", "inv_W", "inv_HMn", "HMx", "M"};

enum class NormScheme { MinMax, MaxDivide };

std::string_view to_string(NormScheme s);
/// Accepts "minmax" / "maxdivide" (case-insensitive).
NormScheme scheme_from_string(std::string_view s);

/// Throws Error(InvalidSpec) on a zero L, W or HMn.
AttributeVector transform_attributes(const RobotSpec & spec);

/**
 * Column-wise normalisation to [0, 1].
 *   MinMax:    (x - min) / (max - min); a constant column maps to 0.5.
 *   MaxDivide: x / max.
 * Throws Error(InsufficientData) for fewer than two rows.
 */
std::vector<AttributeVector> normalize(std::span<const AttributeVector> rows, NormScheme scheme);

/// True when some column is constant (MinMax falls back to 0.5 there).
bool has_degenerate_column(std::span<const AttributeVector> rows);

/// Trapezoidal area under the normalised polyline, unit spacing: sum (a_i + a_{i+1}) / 2.
double score(const AttributeVector & normalized);

struct ScoreRow
{
  std::string name;
  AttributeVector normalized{};
  double score{0.0};
};

/// Rows in input order with their normalised vectors and scores.
std::vector<ScoreRow> score_table(std::span<const RobotSpec> specs, NormScheme scheme);

/// Descending by score, ties broken by name ascending.
std::vector<std::pair<std::string, double>> rank(
  std::span<const RobotSpec> specs, NormScheme scheme);

/// Robot table from JSON (array of objects with name,P,L,W,HMn,HMx,M) or CSV with that header.
std::vector<RobotSpec> parse_spec_table_json(std::string_view text);
std::vector<RobotSpec> parse_spec_table_csv(std::string_view text);
/// Dispatches on the file extension (.csv, otherwise JSON).
std::vector<RobotSpec> load_spec_table(const std::string & path);

/// name,P,inv_L,inv_W,inv_HMn,HMx,M,score
void write_normalized_csv(std::ostream & os, std::span<const ScoreRow> rows);

std::string ranking_to_json(
  std::span<const std::pair<std::string, double>> ranking, NormScheme scheme);

}  // namespace mecalog
