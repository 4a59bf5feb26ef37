#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "helpers.hpp"

using namespace treewalk;
using cli::Json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "treewalk");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  auto path = std::filesystem::temp_directory_path() / ("treewalk_test_" + name);
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(CliAnalyze, PathOfThree) {
  auto r = run({"--no-timing", "analyze", "--input", temp_file("p3.txt", "3\n0 1\n1 2\n")});
  ASSERT_EQ(r.code, 0) << r.err;
  Json j = r.json()["results"];
  EXPECT_EQ(j["vertices"][0]["J"], 10);
  EXPECT_EQ(j["vertices"][1]["J"], 2);
  EXPECT_EQ(j["vertices"][2]["J"], 10);
  EXPECT_EQ(j["t_bestmeet"]["value"]["num"], 1);
  EXPECT_EQ(j["t_bestmeet"]["value"]["den"], 2);
  EXPECT_EQ(j["diameter"], 2);
  EXPECT_EQ(j["barycenter"], Json::array({1}));
  EXPECT_FALSE(r.json().contains("timing_ms"));
}

TEST(CliAnalyze, StarOfThree) {
  auto r = run({"--no-timing", "analyze", "--input", temp_file("s3.txt", "3\n1 0\n1 2\n")});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.json()["results"]["t_meet"]["value"]["num"], 5);
  EXPECT_EQ(r.json()["results"]["t_meet"]["value"]["den"], 2);
}

TEST(CliAnalyze, MalformedInputExitsOne) {
  auto r = run({"analyze", "--input", temp_file("bad.txt", "4\n0 1\n1 2\n")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(CliAnalyze, WritesTraces) {
  std::string input = temp_file("spider.txt", format_edge_list(fixtures::spider(3, 2)));
  auto min_path = (std::filesystem::temp_directory_path() / "treewalk_test_min.jsonl").string();
  auto max_path = (std::filesystem::temp_directory_path() / "treewalk_test_max.jsonl").string();
  auto r = run({"--no-timing", "analyze", "--input", input, "--minimize-trace", min_path, "--maximize-trace", max_path});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(std::filesystem::file_size(min_path) > 0);
  EXPECT_TRUE(std::filesystem::file_size(max_path) > 0);
}

TEST(CliGen, FigureFamilies) {
  auto lever = run({"--no-timing", "gen", "--family", "balanced-lever", "--n", "11", "--d", "5"});
  ASSERT_EQ(lever.code, 0) << lever.err;
  EXPECT_EQ(lever.json()["results"]["canonical"], canonical_form(balanced_lever(11, 5)).code);
  for (const auto& p : lever.json()["results"]["predictions"]) EXPECT_EQ(p["predicted"], p["observed"]);

  auto db = run({"--no-timing", "gen", "--family", "double-broom", "--n", "11", "--d", "5", "--left", "3", "--right", "4"});
  ASSERT_EQ(db.code, 0) << db.err;
  EXPECT_EQ(db.json()["results"]["canonical"], canonical_form(generate(double_broom_spec(11, 5, 3, 4))).code);
}

TEST(CliGen, InvalidFamilyExitsOne) {
  auto r = run({"gen", "--family", "broom", "--n", "5", "--d", "5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("d < n"), std::string::npos) << r.err;
}

TEST(CliGen, WritesEdgeList) {
  auto path = (std::filesystem::temp_directory_path() / "treewalk_test_gen.txt").string();
  auto r = run({"gen", "--family", "path", "--n", "4", "--out", path});
  ASSERT_EQ(r.code, 0);
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  EXPECT_EQ(parse_edge_list(body.str()), path_graph(4));
}

TEST(CliAudit, ExitCodes) {
  EXPECT_EQ(run({"audit", "thm-min", "--n", "8", "--d", "4"}).code, 0);
  auto star = run({"--no-timing", "audit", "formula", "jmax_star_printed", "--n", "3..20"});
  EXPECT_EQ(star.code, 2);
  Json rep = star.json()["results"]["reports"][0];
  EXPECT_EQ(rep["status"], "discrepancy-in-paper");
  EXPECT_EQ(rep["witnesses"][0]["value_num"], 5);
  EXPECT_EQ(rep["witnesses"][1]["value_num"], 10);
  EXPECT_EQ(run({"audit", "no-such-claim", "--n", "5"}).code, 1);
  EXPECT_EQ(run({"audit", "thm-min", "--n", "12", "--d", "4"}).code, 1);
}

TEST(CliSweep, LeverRowsMatchClosedForm) {
  auto r = run({"sweep", "--family", "balanced-lever", "--n", "50", "--d", "2..49"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,d,family,quantity_num,quantity_den");
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    long long n, d;
    char comma;
    std::istringstream row(line);
    row >> n >> comma >> d;
    ExactRational expect = closed_form(FormulaId::bestmeet_lever, n, d);
    EXPECT_NE(line.find("," + numerator_of(expect).str() + "," + denominator_of(expect).str()), std::string::npos)
        << line;
  }
  EXPECT_EQ(rows, 48u);
}

TEST(CliSweep, EnumeratedSevenAndJsonAgree) {
  auto csv = run({"sweep", "--family", "enumerated", "--n", "7", "--quantity", "kemeny"});
  ASSERT_EQ(csv.code, 0);
  std::size_t lines = 0;
  for (char ch : csv.out) lines += ch == '\n';
  EXPECT_EQ(lines, 12u);
  auto json = run({"--no-timing", "sweep", "--family", "enumerated", "--n", "7", "--quantity", "kemeny", "--format", "json"});
  ASSERT_EQ(json.code, 0);
  std::istringstream in(csv.out);
  std::string line;
  std::getline(in, line);
  for (const auto& row : json.json()["results"]["rows"]) {
    std::getline(in, line);
    std::string expect = std::to_string(row["quantity"]["num"].get<long long>()) + "," +
                         std::to_string(row["quantity"]["den"].get<long long>());
    EXPECT_EQ(line.substr(line.size() - expect.size()), expect);
  }
}

TEST(CliSimulate, DeterministicAndAccurate) {
  std::vector<std::string> args{"--no-timing", "simulate", "--family", "path", "--n", "3", "--u", "0", "--w", "2",
                                "--walks", "100000", "--seed", "42"};
  auto a = run(args), b = run(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_LT(std::abs(a.json()["results"]["z"].get<double>()), 4.0);
  auto p2 = run({"--no-timing", "simulate", "--family", "path", "--n", "2", "--walks", "100"});
  EXPECT_EQ(p2.json()["results"]["mean"]["decimal"], "1");
  EXPECT_EQ(p2.json()["results"]["z"], 0.0);
}

TEST(CliSimulate, Errors) {
  EXPECT_EQ(run({"simulate", "--family", "path", "--n", "3", "--walks", "0"}).code, 1);
  EXPECT_EQ(run({"simulate", "--family", "path", "--n", "3", "--w", "7"}).code, 1);
  EXPECT_EQ(run({"simulate"}).code, 1);
}

TEST(Cli, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("analyze"), std::string::npos);
}

TEST(Cli, ThreadsEnvFallback) {
  setenv("TREEWALK_THREADS", "3", 1);
  EXPECT_EQ(cli::threads_from_env(), 3u);
  setenv("TREEWALK_THREADS", "junk", 1);
  EXPECT_EQ(cli::threads_from_env(), 1u);
  unsetenv("TREEWALK_THREADS");
}
