// Copyright (c) 2026 The mecalog Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mecalog/compare.hpp"
#include "mecalog/error.hpp"
#include "oracles.hpp"

using namespace mecalog;

namespace
{

// The seven surveyed platforms.
std::vector<RobotSpec> surveyed()
{
  return load_spec_table(std::string(MECALOG_DATA_DIR) + "/tables/robots.csv");
}

std::vector<oracle::RawRobot> raw(const std::vector<RobotSpec> & specs)
{
  std::vector<oracle::RawRobot> out;
  for (const auto & s : specs) {
    out.push_back({s.payload, s.length, s.width, s.min_height, s.max_height, s.maneuverability});
  }
  return out;
}

std::vector<RobotSpec> random_table(std::mt19937_64 & rng, int n)
{
  std::uniform_real_distribution<double> p(10, 1500);
  std::uniform_real_distribution<double> len(300, 2500);
  std::uniform_real_distribution<double> h(50, 500);
  std::uniform_int_distribution<int> m(1, 3);
  std::vector<RobotSpec> out;
  for (int i = 0; i < n; ++i) {
    const double hmn = h(rng);
    out.push_back({"r" + std::to_string(i), p(rng), len(rng), len(rng), hmn, hmn + h(rng),
        static_cast<double>(m(rng))});
  }
  return out;
}

std::size_t index_of(const std::vector<RobotSpec> & specs, const std::string & name)
{
  return static_cast<std::size_t>(
    std::find_if(specs.begin(), specs.end(), [&](const RobotSpec & s) {return s.name == name;}) -
    specs.begin());
}

}  // namespace

TEST(Transform, WaspL)
{
  const AttributeVector a = transform_attributes({"WaspL", 400, 740, 625, 206, 365, 3});
  EXPECT_EQ(a[0], 400.0);
  EXPECT_DOUBLE_EQ(a[1], 1.0 / 740);
  EXPECT_DOUBLE_EQ(a[2], 1.0 / 625);
  EXPECT_DOUBLE_EQ(a[3], 1.0 / 206);
  EXPECT_EQ(a[4], 365.0);
  EXPECT_EQ(a[5], 3.0);
}

TEST(Transform, Kuka)
{
  const AttributeVector a = transform_attributes({"Kuka-1500", 935, 2000, 800, 470, 670, 3});
  EXPECT_EQ(a[0], 935.0);
  EXPECT_DOUBLE_EQ(a[1], 1.0 / 2000);
  EXPECT_DOUBLE_EQ(a[3], 1.0 / 470);
  EXPECT_EQ(a[4], 670.0);
}

TEST(Transform, ZeroLengthRejected)
{
  try {
    transform_attributes({"bad", 100, 0, 600, 200, 300, 3});
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidSpec);
  }
}

TEST(SpecValidate, Rules)
{
  EXPECT_NO_THROW((RobotSpec{"ok", 1, 1, 1, 1, 1, 1}.validate()));
  EXPECT_THROW((RobotSpec{"neg", -1, 1, 1, 1, 1, 1}.validate()), Error);
  EXPECT_THROW((RobotSpec{"inv", 1, 1, 1, 300, 200, 1}.validate()), Error);
}

TEST(Normalize, SurveyedMinMax)
{
  const auto specs = surveyed();
  ASSERT_EQ(specs.size(), 7u);
  const auto rows = score_table(specs, NormScheme::MinMax);
  const auto kuka = index_of(specs, "Kuka-1500");
  const auto wasp = index_of(specs, "WaspL");
  EXPECT_EQ(rows[kuka].normalized[0], 1.0);
  EXPECT_EQ(rows[wasp].normalized[0], 0.0);
  // longest robot gets the smallest 1/L
  EXPECT_EQ(rows[kuka].normalized[1], 0.0);
}

TEST(Normalize, SurveyedMaxDivide)
{
  const auto specs = surveyed();
  const auto rows = score_table(specs, NormScheme::MaxDivide);
  EXPECT_NEAR(rows[index_of(specs, "WaspL")].normalized[0], 400.0 / 935.0, 1e-15);
  EXPECT_NEAR(400.0 / 935.0, 0.4278, 1e-4);
}

TEST(Normalize, DegenerateColumnIsHalf)
{
  const std::vector<AttributeVector> t = {{1, 2, 3, 4, 5, 3}, {2, 3, 4, 5, 6, 3}, {0, 1, 1, 1, 1, 3}};
  EXPECT_TRUE(has_degenerate_column(t));
  for (const auto & r : normalize(t, NormScheme::MinMax)) {
    EXPECT_EQ(r[5], 0.5);
  }
  for (const auto & r : normalize(t, NormScheme::MaxDivide)) {
    EXPECT_EQ(r[5], 1.0);
  }
}

TEST(Normalize, NeedsTwoRows)
{
  const std::vector<AttributeVector> one = {{1, 1, 1, 1, 1, 1}};
  try {
    normalize(one, NormScheme::MinMax);
    FAIL();
  } catch (const Error & e) {
    EXPECT_EQ(e.code(), ErrorCode::InsufficientData);
  }
}

TEST(Normalize, BoundsAndExtremesOnRandomTables)
{
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto specs = random_table(rng, 2 + trial % 9);
    std::vector<AttributeVector> t;
    for (const auto & s : specs) {
      t.push_back(transform_attributes(s));
    }
    for (NormScheme scheme : {NormScheme::MinMax, NormScheme::MaxDivide}) {
      const auto n = normalize(t, scheme);
      for (int c = 0; c < 6; ++c) {
        bool constant = true;
        for (const auto & r : t) {
          constant = constant && r[c] == t[0][c];
        }
        double lo = 2.0;
        double hi = -1.0;
        for (const auto & r : n) {
          ASSERT_GE(r[c], 0.0);
          ASSERT_LE(r[c], 1.0);
          lo = std::min(lo, r[c]);
          hi = std::max(hi, r[c]);
        }
        if (scheme == NormScheme::MinMax && constant) {
          EXPECT_EQ(lo, 0.5);
          EXPECT_EQ(hi, 0.5);
        } else {
          EXPECT_EQ(hi, 1.0);
          if (scheme == NormScheme::MinMax) {
            EXPECT_EQ(lo, 0.0);
          }
        }
      }
    }
  }
}

TEST(Score, Examples)
{
  EXPECT_EQ(score({1, 1, 1, 1, 1, 1}), 5.0);
  EXPECT_EQ(score({0, 0, 0, 0, 0, 0}), 0.0);
  EXPECT_EQ(score({1, 0, 1, 0, 1, 0}), 2.5);
  EXPECT_EQ(score({0, 1, 0, 1, 0, 1}), 2.5);
  EXPECT_EQ(score({1, 0, 0, 0, 0, 0}), 0.5);
}

TEST(Score, MatchesLonghandTrapezoid)
{
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 10000; ++i) {
    AttributeVector a;
    for (double & v : a) {
      v = u(rng);
    }
    ASSERT_NEAR(score(a), oracle::trapezoid(a), 1e-14);
  }
}

TEST(Score, MonotoneInEachEntry)
{
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 0.9);
  for (int i = 0; i < 2000; ++i) {
    AttributeVector a;
    for (double & v : a) {
      v = u(rng);
    }
    const double base = score(a);
    for (int k = 0; k < 6; ++k) {
      AttributeVector b = a;
      b[k] += 0.1;
      ASSERT_GT(score(b), base);
    }
  }
}

TEST(Rank, MatchesBruteForceOracle)
{
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto specs = random_table(rng, 2 + trial % 12);
    for (NormScheme scheme : {NormScheme::MinMax, NormScheme::MaxDivide}) {
      const auto rows = score_table(specs, scheme);
      const auto ref = oracle::brute_force_scores(raw(specs), scheme == NormScheme::MinMax);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        ASSERT_NEAR(rows[i].score, ref[i], 1e-12);
      }
    }
  }
}

TEST(Rank, SurveyedOrderingAgreesWithOracle)
{
  const auto specs = surveyed();
  const auto ranking = rank(specs, NormScheme::MinMax);
  const auto ref = oracle::brute_force_scores(raw(specs), true);
  for (std::size_t i = 0; i + 1 < ranking.size(); ++i) {
    EXPECT_GE(ranking[i].second, ranking[i + 1].second);
  }
  for (const auto & [name, s] : ranking) {
    EXPECT_NEAR(s, ref[index_of(specs, name)], 1e-12);
  }
  EXPECT_EQ(ranking.front().first, "WaspL");
}

TEST(Rank, TiesBrokenByName)
{
  const std::vector<RobotSpec> specs = {
    {"b", 100, 500, 500, 200, 300, 3}, {"a", 100, 500, 500, 200, 300, 3},
    {"c", 50, 900, 900, 300, 300, 1}};
  const auto r = rank(specs, NormScheme::MinMax);
  EXPECT_EQ(r[0].first, "a");
  EXPECT_EQ(r[1].first, "b");
  EXPECT_EQ(r[2].first, "c");
}

TEST(Rank, PermutationInvariant)
{
  std::mt19937_64 rng(29);
  auto specs = random_table(rng, 10);
  const auto base = rank(specs, NormScheme::MinMax);
  for (int k = 0; k < 10; ++k) {
    std::shuffle(specs.begin(), specs.end(), rng);
    const auto r = rank(specs, NormScheme::MinMax);
    ASSERT_EQ(r.size(), base.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
      EXPECT_EQ(r[i].first, base[i].first);
      EXPECT_NEAR(r[i].second, base[i].second, 1e-12);
    }
  }
}

TEST(Rank, UnitScaleInvariant)
{
  std::mt19937_64 rng(31);
  const auto specs = random_table(rng, 8);
  auto scaled = specs;
  for (auto & s : scaled) {
    // kg -> lb for payload, mm -> cm for all lengths
    s.payload *= 2.20462;
    s.length /= 10;
    s.width /= 10;
    s.min_height /= 10;
    s.max_height /= 10;
  }
  for (NormScheme scheme : {NormScheme::MinMax, NormScheme::MaxDivide}) {
    const auto a = rank(specs, scheme);
    const auto b = rank(scaled, scheme);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].first, b[i].first);
      EXPECT_NEAR(a[i].second, b[i].second, 1e-12);
    }
  }
}

TEST(Rank, ImprovingAnAttributeNeverLowersScore)
{
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 100; ++trial) {
    auto specs = random_table(rng, 6);
    const auto before = score_table(specs, NormScheme::MaxDivide);
    specs[0].payload *= 1.2;
    const auto after = score_table(specs, NormScheme::MaxDivide);
    EXPECT_GE(after[0].score, before[0].score - 1e-12);
  }
}

TEST(SchemeNames, RoundTrip)
{
  EXPECT_EQ(scheme_from_string("minmax"), NormScheme::MinMax);
  EXPECT_EQ(scheme_from_string("MaxDivide"), NormScheme::MaxDivide);
  EXPECT_EQ(to_string(NormScheme::MaxDivide), "maxdivide");
  EXPECT_THROW(scheme_from_string("zscore"), Error);
}

TEST(TableIo, JsonAndCsvAgree)
{
  const auto csv = surveyed();
  const auto json = load_spec_table(std::string(MECALOG_DATA_DIR) + "/tables/robots.json");
  ASSERT_EQ(csv.size(), json.size());
  for (std::size_t i = 0; i < csv.size(); ++i) {
    EXPECT_EQ(csv[i].name, json[i].name);
    EXPECT_EQ(csv[i].payload, json[i].payload);
    EXPECT_EQ(csv[i].max_height, json[i].max_height);
  }
}

TEST(TableIo, ParseVariants)
{
  const auto a = parse_spec_table_json(
    R"([{"name":"x","P":1,"L":2,"W":3,"HMn":4,"HMx":5,"M":3}])");
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].width, 3.0);
  const auto b = parse_spec_table_json(
    R"({"robots":[{"name":"y","P":1,"L":2,"W":3,"HMn":4,"HMx":5,"M":2}]})");
  EXPECT_EQ(b[0].maneuverability, 2.0);
  const auto c = parse_spec_table_csv("name,P,L,W,HMn,HMx,M\nz,1,2,3,4,5,3\n");
  EXPECT_EQ(c[0].name, "z");
  EXPECT_THROW(parse_spec_table_csv("name,P\nz,1\n"), Error);
  EXPECT_THROW(parse_spec_table_json("{"), Error);
}

TEST(TableIo, NormalizedCsv)
{
  const auto specs = surveyed();
  const auto rows = score_table(specs, NormScheme::MinMax);
  std::ostringstream os;
  write_normalized_csv(os, rows);
  const std::string out = os.str();
  EXPECT_EQ(out.substr(0, out.find('\n')), "name,P,inv_L,inv_W,inv_HMn,HMx,M,score");
  EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 8);
}
