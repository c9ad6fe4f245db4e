#include "edgesim/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

fs::path temp_path(const std::string& name) {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / "edgesim_cli_tests";
    fs::create_directories(d);
    return d;
  }();
  return dir / name;
}

fs::path write_file(const std::string& name, const std::string& content) {
  fs::path p = temp_path(name);
  std::ofstream out(p, std::ios::binary);
  out << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

const std::string kTriangle = "a b\nb c\na c\n";
const std::string kTwoTriangles = "0 1\n1 2\n0 2\n3 4\n4 5\n3 5\n2 3\n";
const std::string kKarateEdges = EDGESIM_DATA_DIR "/karate.edges";
const std::string kKarateTruth = EDGESIM_DATA_DIR "/karate.communities";

}  // namespace

TEST(CliScore, TriangleNdesEmitsBothDirections) {
  auto graph = write_file("triangle.edges", kTriangle);
  auto out = temp_path("triangle_ndes.csv");
  int rc = edgesim::cli::run({"score", "--graph", graph.string(), "--measure", "ndes", "--out",
                              out.string()});
  EXPECT_EQ(rc, 0);
  EXPECT_EQ(slurp(out),
            "src,dst,score\n"
            "a,b,1\nb,a,1\n"
            "a,c,1\nc,a,1\n"
            "b,c,1\nc,b,1\n");
}

TEST(CliScore, TriangleJaccardEmitsOneRowPerEdge) {
  auto graph = write_file("triangle.edges", kTriangle);
  auto out = temp_path("triangle_jaccard.csv");
  int rc = edgesim::cli::run({"score", "--graph", graph.string(), "--measure", "jaccard", "--out",
                              out.string()});
  EXPECT_EQ(rc, 0);
  auto rows = lines_of(slurp(out));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], "src,dst,score");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    auto comma = rows[i].rfind(',');
    EXPECT_DOUBLE_EQ(std::stod(rows[i].substr(comma + 1)), 1.0 / 3.0);
  }
}

TEST(CliScore, JsonFormatIsParseable) {
  auto graph = write_file("triangle.edges", kTriangle);
  auto out = temp_path("triangle_ndes.json");
  int rc = edgesim::cli::run({"score", "--graph", graph.string(), "--measure", "ndes", "--format",
                              "json", "--out", out.string()});
  EXPECT_EQ(rc, 0);
  auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["measure"], "ndes");
  EXPECT_EQ(j["directed"], true);
  EXPECT_EQ(j["scores"].size(), 6u);
}

TEST(CliScore, MultipleMeasuresFanOutToSeparateFiles) {
  auto graph = write_file("triangle.edges", kTriangle);
  auto out = temp_path("scores.csv");
  int rc = edgesim::cli::run({"score", "--graph", graph.string(), "--measure", "jaccard",
                              "--measure", "salton", "--out", out.string()});
  EXPECT_EQ(rc, 0);
  EXPECT_TRUE(fs::exists(temp_path("scores.jaccard.csv")));
  EXPECT_TRUE(fs::exists(temp_path("scores.salton.csv")));
}

TEST(CliScore, MissingGraphFileExitsTwo) {
  EXPECT_EQ(edgesim::cli::run({"score", "--graph", "/nonexistent/g.edges", "--measure", "ndes"}),
            2);
}

TEST(CliScore, MalformedGraphFileExitsTwo) {
  auto graph = write_file("bad.edges", "a b\nx y z\n");
  EXPECT_EQ(edgesim::cli::run({"score", "--graph", graph.string(), "--measure", "ndes"}), 2);
}

TEST(CliScore, EmptyGraphFileExitsTwo) {
  auto graph = write_file("empty.edges", "# nothing here\n");
  EXPECT_EQ(edgesim::cli::run({"score", "--graph", graph.string(), "--measure", "ndes"}), 2);
}

TEST(CliScore, UnknownMeasureExitsTwo) {
  auto graph = write_file("triangle.edges", kTriangle);
  EXPECT_EQ(edgesim::cli::run({"score", "--graph", graph.string(), "--measure", "katz"}), 2);
}

TEST(CliDetect, TwoTrianglesSplitAtBridge) {
  auto graph = write_file("bridge.edges", kTwoTriangles);
  auto out = temp_path("bridge.communities");
  int rc = edgesim::cli::run({"detect", "--graph", graph.string(), "--measure", "ndes",
                              "--threshold", "0.9", "--out", out.string()});
  EXPECT_EQ(rc, 0);
  EXPECT_EQ(slurp(out), "0 1 2\n3 4 5\n");
}

TEST(CliDetect, BadThresholdExitsTwo) {
  auto graph = write_file("triangle.edges", kTriangle);
  EXPECT_EQ(edgesim::cli::run({"detect", "--graph", graph.string(), "--measure", "ndes",
                               "--threshold", "high"}),
            2);
}

TEST(CliCompare, KarateFourMeasureTable) {
  auto out = temp_path("karate_compare.md");
  int rc = edgesim::cli::run({"compare", "--graph", kKarateEdges, "--truth", kKarateTruth,
                              "--measure", "ndes", "--measure", "jaccard", "--measure", "salton",
                              "--measure", "adamic_adar", "--out", out.string()});
  EXPECT_EQ(rc, 0);
  auto rows = lines_of(slurp(out));
  ASSERT_GE(rows.size(), 8u);
  EXPECT_EQ(rows[0], "### karate");
  EXPECT_EQ(rows[2],
            "| measure | nmi | ari | nf1 | modularity | conductance | cut_ratio | expansion |");
  EXPECT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[4].substr(0, 7), "| ndes ");
}

TEST(CliCompare, JsonReportCarriesVariantMetadata) {
  auto out = temp_path("karate_compare.json");
  int rc = edgesim::cli::run({"compare", "--graph", kKarateEdges, "--truth", kKarateTruth,
                              "--measure", "ndes", "--measure", "jaccard", "--format", "json",
                              "--out", out.string()});
  EXPECT_EQ(rc, 0);
  auto j = nlohmann::json::parse(slurp(out));
  EXPECT_EQ(j["nf1_variant"], edgesim::kNf1Variant);
  ASSERT_EQ(j["reports"].size(), 2u);
  EXPECT_EQ(j["reports"][0]["dataset"], "karate");
  EXPECT_TRUE(j["reports"][0].contains("nmi"));
  EXPECT_TRUE(j["reports"][0].contains("modularity"));
}

TEST(CliCompare, RepeatRunsAreByteIdentical) {
  auto out1 = temp_path("repeat1.csv");
  auto out2 = temp_path("repeat2.csv");
  std::vector<std::string> args{"compare", "--graph",   kKarateEdges, "--truth",
                                kKarateTruth, "--measure", "all",        "--format",
                                "csv"};
  auto run1 = args;
  run1.insert(run1.end(), {"--out", out1.string()});
  auto run2 = args;
  run2.insert(run2.end(), {"--out", out2.string()});
  ASSERT_EQ(edgesim::cli::run(run1), 0);
  ASSERT_EQ(edgesim::cli::run(run2), 0);
  std::string first = slurp(out1);
  EXPECT_FALSE(first.empty());
  EXPECT_EQ(first, slurp(out2));
}

TEST(CliCompare, MissingTruthExitsTwo) {
  EXPECT_EQ(edgesim::cli::run({"compare", "--graph", kKarateEdges, "--measure", "ndes"}), 2);
}

TEST(CliEval, SingleMeasureCsvRow) {
  auto out = temp_path("karate_eval.csv");
  int rc = edgesim::cli::run({"eval", "--graph", kKarateEdges, "--truth", kKarateTruth,
                              "--measure", "ndes", "--format", "csv", "--out", out.string()});
  EXPECT_EQ(rc, 0);
  auto rows = lines_of(slurp(out));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0], "dataset,measure,nmi,ari,nf1,modularity,conductance,cut_ratio,expansion");
  EXPECT_EQ(rows[1].substr(0, 12), "karate,ndes,");
}

TEST(CliBench, SmallLadderEmitsTimingRows) {
  auto out = temp_path("bench.csv");
  int rc = edgesim::cli::run({"bench", "--measure", "jaccard", "--sizes", "100,200",
                              "--max-degree", "6", "--seed", "1", "--out", out.string()});
  EXPECT_EQ(rc, 0);
  auto rows = lines_of(slurp(out));
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0], "n,k,measure,seconds");
  EXPECT_EQ(rows[1].substr(0, 4), "100,");
  EXPECT_EQ(rows[2].substr(0, 4), "200,");
}

TEST(CliBench, MissingMeasureExitsTwo) {
  EXPECT_EQ(edgesim::cli::run({"bench", "--sizes", "100"}), 2);
}

TEST(CliParsing, NoSubcommandExitsTwo) {
  EXPECT_EQ(edgesim::cli::run({}), 2);
}
