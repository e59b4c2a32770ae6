//
// Copyright 2026 The Geopriv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "geopriv/emit.h"

#include <filesystem>
#include <string>
#include <vector>

#include "absl/strings/str_split.h"
#include "geopriv/io_util.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"

namespace geopriv {
namespace {

using ::testing::HasSubstr;

std::string TempPath(const std::string& name) {
  return (std::filesystem::path(::testing::TempDir()) / name).string();
}

std::vector<std::string> Lines(const std::string& s) {
  return absl::StrSplit(s, '\n', absl::SkipEmpty());
}

SummaryRow OneRow() {
  SummaryRow r;
  r.family = Family::kGaussian;
  r.d_m = 100;
  r.qavg_m = 500;
  r.avg_perr = 0.45;
  r.min_perr = 0.1;
  r.pct_better = 62.5;
  r.histogram.assign(50, 0);
  r.histogram[49] = 20000;
  return r;
}

TEST(FormatSummariesTest, EmptyIsHeaderOnly) {
  const std::string csv = FormatSummaries({}, OutputFormat::kCsv);
  const auto lines = Lines(csv);
  ASSERT_EQ(lines.size(), 1u);
  EXPECT_THAT(lines[0], ::testing::StartsWith(
                            "family,d_m,qavg_m,avg_perr,min_perr,pct_better,bin_0,"));
  EXPECT_THAT(lines[0], ::testing::EndsWith(",bin_49"));
  EXPECT_EQ(std::vector<std::string>(absl::StrSplit(lines[0], ',')).size(), 56u);
}

TEST(FormatSummariesTest, OneRowHasFiftySixColumns) {
  const std::vector<SummaryRow> rows = {OneRow()};
  const auto lines = Lines(FormatSummaries(rows, OutputFormat::kCsv));
  ASSERT_EQ(lines.size(), 2u);
  const std::vector<std::string> f = absl::StrSplit(lines[1], ',');
  ASSERT_EQ(f.size(), 56u);
  EXPECT_EQ(f[0], "gaussian");
  EXPECT_EQ(f[1], "100");
  EXPECT_EQ(f[3], "0.45");
  EXPECT_EQ(f[5], "62.5");
  EXPECT_EQ(f[55], "20000");
}

TEST(FormatSummariesTest, LaplaceHasEmptyPctBetter) {
  SummaryRow r = OneRow();
  r.family = Family::kLaplace;
  r.pct_better.reset();
  const std::vector<SummaryRow> rows = {r};
  const std::vector<std::string> f =
      absl::StrSplit(Lines(FormatSummaries(rows, OutputFormat::kCsv))[1], ',');
  EXPECT_EQ(f[5], "");
  const auto j = nlohmann::json::parse(FormatSummaries(rows, OutputFormat::kJson));
  EXPECT_TRUE(j[0]["pct_better"].is_null());
  EXPECT_EQ(j[0]["histogram"].size(), 50u);
}

TEST(FormatTest, ShortestRoundTripNumbers) {
  EXPECT_EQ(FormatDouble(0.1), "0.1");
  EXPECT_EQ(FormatDouble(1e-300), "1e-300");
  EXPECT_EQ(FormatDouble(20000), "20000");
  const double v = 0.43742802123456789;
  EXPECT_EQ(*ParseDouble(FormatDouble(v)), v);
}

TEST(FormatTest, OtherSchemas) {
  EXPECT_EQ(Lines(FormatTradeoff({}, OutputFormat::kCsv))[0],
            "epsilon_inv_km,eps_star,perr_min,qavg_m,r95_m");
  EXPECT_EQ(Lines(FormatGowalla({}, OutputFormat::kCsv))[0],
            "epsilon_inv_km,qavg_remap_m,r95_remap_m,qavg_plain_m,r95_plain_m,"
            "qavg_reduction_pct,r95_reduction_pct");
  EXPECT_EQ(Lines(FormatTrialRecords({}, OutputFormat::kCsv))[0],
            "family,d_m,qavg_m,trial,true_location,z_x_m,z_y_m,perr");
  EXPECT_EQ(Lines(FormatCrossovers({}, OutputFormat::kCsv))[0],
            "family,qavg_m,avg_perr_crossover_d_m,pct_better_crossover_d_m");
  const std::vector<TradeoffRow> t = {{0.002, 1.0, 0.25, 1000, 2371.9}};
  EXPECT_EQ(Lines(FormatTradeoff(t, OutputFormat::kCsv))[1],
            "2,1,0.25,1000,2371.9");
}

TEST(FormatTest, ByteIdenticalAcrossCalls) {
  const std::vector<SummaryRow> rows = {OneRow(), OneRow()};
  EXPECT_EQ(FormatSummaries(rows, OutputFormat::kCsv),
            FormatSummaries(rows, OutputFormat::kCsv));
  EXPECT_EQ(FormatSummaries(rows, OutputFormat::kJson),
            FormatSummaries(rows, OutputFormat::kJson));
}

TEST(ParseOutputFormatTest, Names) {
  EXPECT_EQ(*ParseOutputFormat("csv"), OutputFormat::kCsv);
  EXPECT_EQ(*ParseOutputFormat("json"), OutputFormat::kJson);
  EXPECT_FALSE(ParseOutputFormat("xml").ok());
}

TEST(DigestTest, KnownVectors) {
  EXPECT_EQ(Fnv1a64Hex(""), "cbf29ce484222325");
  EXPECT_EQ(Fnv1a64Hex("a"), "af63dc4c8601ec8c");
  EXPECT_EQ(Fnv1a64Hex("foobar"), "85944171f73967e8");
}

TEST(EmitWithManifestTest, WritesOutputAndManifest) {
  const std::string path = TempPath("emit_out.csv");
  const std::string contents = FormatSummaries({}, OutputFormat::kCsv);
  ASSERT_TRUE(EmitWithManifest(path, contents, {{"seed", 42}}).ok());
  EXPECT_EQ(*ReadFile(path), contents);
  const auto m = nlohmann::json::parse(*ReadFile(path + ".manifest.json"));
  EXPECT_EQ(m["seed"], 42);
  EXPECT_EQ(m["code_version"], std::string(CodeVersion()));
  EXPECT_EQ(m["output_digest_fnv1a64"], Fnv1a64Hex(contents));
  EXPECT_EQ(*Fnv1a64FileHex(path), Fnv1a64Hex(contents));
}

TEST(EmitWithManifestTest, UnwritablePathLeavesNothing) {
  const std::string dir = TempPath("no_such_dir_for_emit");
  std::filesystem::remove_all(dir);
  const absl::Status s = EmitWithManifest(dir + "/out.csv", "x\n", {});
  EXPECT_FALSE(s.ok());
  EXPECT_THAT(s.message(), HasSubstr("IoError"));
  EXPECT_FALSE(std::filesystem::exists(dir));
}

TEST(WriteFileAtomicTest, ReplacesExistingFile) {
  const std::string path = TempPath("atomic.txt");
  ASSERT_TRUE(WriteFileAtomic(path, "first").ok());
  ASSERT_TRUE(WriteFileAtomic(path, "second").ok());
  EXPECT_EQ(*ReadFile(path), "second");
  for (const auto& e :
       std::filesystem::directory_iterator(::testing::TempDir())) {
    EXPECT_THAT(e.path().filename().string(),
                ::testing::Not(HasSubstr("atomic.txt.tmp")));
  }
}

}  // namespace
}  // namespace geopriv
