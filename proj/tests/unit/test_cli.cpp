#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "threeway/app/commands.hpp"
#include "threeway/app/ingest.hpp"
#include "threeway/app/report.hpp"
#include "threeway/error.hpp"

namespace threeway::app {
namespace {

const std::string kData = THREEWAY_TEST_DATA_DIR;

ErrorKind dataset_error(const std::string& csv, std::string* message = nullptr) {
  std::istringstream in(csv);
  try {
    parse_dataset(in);
  } catch (const Error& e) {
    if (message) *message = e.what();
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << csv;
  return ErrorKind::MissingInput;
}

ErrorKind losses_error(const std::string& json) {
  try {
    parse_losses(json);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "accepted: " << json;
  return ErrorKind::MissingInput;
}

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "threeway");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("threeway_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(Ingest, TwoObjects) {
  std::istringstream in("id,lo,hi\nx1,0.1,0.2\nx2,0.6,0.8");
  const IVFuzzySet s = parse_dataset(in);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s.grade("x2"), make_interval(0.6, 0.8));
  EXPECT_EQ(s.entries()[0].first.str(), "x1");
}

TEST(Ingest, ToleratesCrlfAndBlankLines) {
  std::istringstream in("id,lo,hi\r\n\r\nx1, 0.1 ,0.2\r\n");
  EXPECT_EQ(parse_dataset(in).size(), 1u);
}

TEST(Ingest, InvertedRowIsNamed) {
  std::string msg;
  EXPECT_EQ(dataset_error("id,lo,hi\nx1,0.1,0.2\nx2,0.6,0.8\nx3,0.3,0.5\nx4,0.8,0.1\n", &msg),
            ErrorKind::InvertedBounds);
  EXPECT_NE(msg.find("row 4"), std::string::npos) << msg;
}

TEST(Ingest, Errors) {
  std::string msg;
  EXPECT_EQ(dataset_error("id,lo,hi\nx1,0.1,0.2\nx1,0.3,0.4\n", &msg), ErrorKind::DuplicateId);
  EXPECT_NE(msg.find("row 2"), std::string::npos);
  EXPECT_EQ(dataset_error("x1,0.1,0.2\n"), ErrorKind::ParseError);
  EXPECT_EQ(dataset_error(""), ErrorKind::ParseError);
  EXPECT_EQ(dataset_error("id,lo,hi\nx1,0.1\n"), ErrorKind::ParseError);
  EXPECT_EQ(dataset_error("id,lo,hi\nx1,abc,0.2\n", &msg), ErrorKind::ParseError);
  EXPECT_NE(msg.find("column 2"), std::string::npos);
  EXPECT_EQ(dataset_error("id,lo,hi\nx1,0.1,1.2\n"), ErrorKind::OutOfRange);
  EXPECT_EQ(dataset_error("id,lo,hi\n,0.1,0.2\n"), ErrorKind::ParseError);
}

TEST(Ingest, Losses) {
  const IntervalLossProfile p =
      parse_losses(R"({"lambda_e":[1,2],"lambda_r":[5,6],"lambda_sd":[3,4],"lambda_su":[3,4]})");
  EXPECT_EQ(p.lambda_e(), make_interval(1, 2));
  EXPECT_EQ(p.lambda_r(), make_interval(5, 6));
  EXPECT_EQ(p.lambda_sd(), make_interval(3, 4));
  EXPECT_EQ(p.lambda_su(), make_interval(3, 4));

  const IntervalLossProfile s = parse_losses(R"({"lambda_e":1,"lambda_r":1,"lambda_sd":1,"lambda_su":1})");
  EXPECT_TRUE(s.lambda_e().degenerate());
  EXPECT_EQ(s.lambda_su(), Interval::point(1));
}

TEST(Ingest, LossErrors) {
  EXPECT_EQ(losses_error(R"({"lambda_e":[2,1],"lambda_r":1,"lambda_sd":1,"lambda_su":1})"), ErrorKind::InvertedBounds);
  EXPECT_EQ(losses_error(R"({"lambda_e":0,"lambda_r":1,"lambda_sd":1,"lambda_su":1})"), ErrorKind::NonPositiveLoss);
  EXPECT_EQ(losses_error(R"({"lambda_e":1,"lambda_r":1,"lambda_sd":1})"), ErrorKind::ParseError);
  EXPECT_EQ(losses_error(R"({"lambda_e":1,"lambda_r":1,"lambda_sd":1,"lambda_su":1,"x":2})"), ErrorKind::ParseError);
  EXPECT_EQ(losses_error(R"({"lambda_e":[1],"lambda_r":1,"lambda_sd":1,"lambda_su":1})"), ErrorKind::ParseError);
  EXPECT_EQ(losses_error(R"({"lambda_e":"1","lambda_r":1,"lambda_sd":1,"lambda_su":1})"), ErrorKind::ParseError);
  EXPECT_EQ(losses_error("{not json"), ErrorKind::ParseError);
  EXPECT_EQ(losses_error("[1,2]"), ErrorKind::ParseError);
}

TEST(Report, Numbers) {
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(4.5), "4.5");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(number(-std::numeric_limits<double>::infinity()), Json("-inf"));
  for (double x : {0.1, 1.0 / 3.0, 2.5e-300, 123456.789}) EXPECT_EQ(std::stod(format_double(x)), x);
}

TEST(Report, CsvFlattensAndQuotes) {
  Report r;
  r.command = "demo";
  r.summary["note"] = "a,b";
  r.rows.push_back(Json{{"id", "x"}, {"grade", Json::array({0.5, 1})}});
  const std::string csv = render_csv(r);
  EXPECT_NE(csv.find("# summary.note,\"a,b\"\n"), std::string::npos) << csv;
  EXPECT_NE(csv.find("id,grade.0,grade.1\nx,0.5,1\n"), std::string::npos) << csv;
}

TEST(Commands, DecideIvExample) {
  RunConfig cfg;
  cfg.dataset = kData + "/example.csv";
  cfg.losses = kData + "/example_losses.json";
  const Report r = run_subcommand("decide-iv", cfg);
  ASSERT_EQ(r.rows.size(), 4u);
  EXPECT_EQ(r.rows[1]["id"], "x2");
  EXPECT_EQ(r.rows[1]["region"], "elevate");
  EXPECT_EQ(r.rows[1]["value"], 1.0);
  EXPECT_EQ(r.rows[2]["region"], "shadow");
  EXPECT_EQ(r.rows[2]["value"], 0.5);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.config["theta"], 0.5);
  EXPECT_EQ(r.config["seed"], 42);
}

TEST(Commands, ThresholdsOnValidProfile) {
  RunConfig cfg;
  cfg.losses = kData + "/valid_losses.json";
  const Report r = run_subcommand("thresholds", cfg);
  EXPECT_DOUBLE_EQ(r.summary["thresholds"]["alpha"].get<double>(), 0.65);
  EXPECT_DOUBLE_EQ(r.summary["thresholds"]["beta"].get<double>(), 3.0 / 28.0);
  EXPECT_EQ(r.summary["thresholds"]["gamma_plus"], "inf");
  EXPECT_EQ(r.summary["scan"]["ok"], true);
}

TEST(Commands, ThresholdsRejectC3Violation) {
  RunConfig cfg;
  cfg.losses = kData + "/example_losses.json";
  EXPECT_THROW(run_subcommand("thresholds", cfg), Error);
}

TEST(Commands, MissingInputs) {
  RunConfig cfg;
  for (const char* name : {"reduce", "shadow", "approx", "thresholds", "decide", "decide-iv"}) {
    try {
      run_subcommand(name, cfg);
      ADD_FAILURE() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::MissingInput) << name;
    }
  }
}

TEST(Commands, ShadowAndApprox) {
  RunConfig cfg;
  cfg.dataset = kData + "/example.csv";
  const Report s = run_subcommand("shadow", cfg);
  EXPECT_EQ(s.summary["scan"]["ok"], true);
  EXPECT_EQ(s.config["grid"], 10000);
  cfg.alpha = 0.8;
  cfg.beta = 0.2;
  const Report a = run_subcommand("approx", cfg);
  EXPECT_EQ(a.summary["counts"]["shadow"], 3);
  EXPECT_EQ(a.summary["counts"]["reduce"], 1);
  EXPECT_NEAR(a.summary["total_error"].get<double>(), 0.5, 1e-15);
}

TEST(Commands, DecideMatchesDecideIvOnScalars) {
  // Degenerate grades and losses: both pipelines reduce to the same argmin.
  // Grades sitting on a threshold are skipped; there the two sides of the
  // tie differ only by rounding.
  std::string csv = "id,lo,hi\n";
  for (int i = 0; i <= 100; i += 3) {
    csv += "x" + std::to_string(i) + "," + std::to_string(i / 100.0) + "," + std::to_string(i / 100.0) + "\n";
  }
  RunConfig cfg;
  cfg.dataset = temp_file("scalars.csv", csv);
  for (const char* losses : {R"({"lambda_e":2,"lambda_r":3,"lambda_sd":1,"lambda_su":1.5})",
                             R"({"lambda_e":1,"lambda_r":4,"lambda_sd":4,"lambda_su":0.5})",
                             R"({"lambda_e":7,"lambda_r":0.5,"lambda_sd":0.25,"lambda_su":7})"}) {
    cfg.losses = temp_file("scalar_losses.json", losses);
    const Report a = run_subcommand("decide", cfg);
    const Report b = run_subcommand("decide-iv", cfg);
    ASSERT_EQ(a.rows.size(), b.rows.size());
    const double alpha = a.summary["thresholds"]["alpha"].get<double>();
    const double beta = a.summary["thresholds"]["beta"].get<double>();
    for (std::size_t i = 0; i < a.rows.size(); ++i) {
      const double m = a.rows[i]["m_theta"].get<double>();
      if (std::abs(m - alpha) <= 1e-9 || std::abs(m - beta) <= 1e-9) continue;
      EXPECT_EQ(a.rows[i]["region"], b.rows[i]["region"]) << losses << " " << a.rows[i]["id"];
    }
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"reduce", "--dataset", kData + "/example.csv"}).code, 0);
  EXPECT_EQ(cli({"reduce", "--dataset", kData + "/inverted_x4.csv"}).code, 1);
  EXPECT_EQ(cli({"reduce", "--dataset", kData + "/nope.csv"}).code, 1);
  EXPECT_EQ(cli({"reduce", "--dataset", kData + "/example.csv", "--theta", "2"}).code, 1);
  EXPECT_EQ(cli({"reduce", "--grid", "0"}).code, 1);
  EXPECT_EQ(cli({"frobnicate"}).code, 1);
  EXPECT_EQ(cli({}).code, 1);
  EXPECT_EQ(cli({"--help"}).code, 0);
  const CliRun bad = cli({"approx", "--dataset", kData + "/example.csv"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("MissingInput"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args = {"decide-iv", "--dataset", kData + "/example.csv", "--losses",
                                         kData + "/example_losses.json", "--format", "csv"};
  const CliRun a = cli(args), b = cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("# config.theta,0.5"), std::string::npos);
}

TEST(Cli, ConfigEchoesFlags) {
  const CliRun r = cli({"reduce", "--dataset", kData + "/example.csv", "--theta", "0.25", "--seed", "7", "--grid", "11",
                     "--epsilon", "1e-6"});
  ASSERT_EQ(r.code, 0);
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["config"]["theta"], 0.25);
  EXPECT_EQ(doc["config"]["seed"], 7);
  EXPECT_EQ(doc["config"]["grid"], 11);
  EXPECT_EQ(doc["config"]["epsilon"], 1e-6);
}

TEST(Cli, CheckSmallRunPasses) {
  const CliRun r = cli({"check", "--cases", "500", "--seed", "3"});
  EXPECT_EQ(r.code, 0) << r.out;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["summary"]["violations"], 0);
}

}  // namespace
}  // namespace threeway::app
