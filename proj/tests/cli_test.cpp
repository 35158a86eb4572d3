#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "moebius/json_io.hpp"
#include "support.hpp"

namespace moebius {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "moebius");
  std::vector<const char*> argv;
  for (const auto& a : args) {
    argv.push_back(a.c_str());
  }
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::main_with_args(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return testing::data_path(name); }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("moebius_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

TEST_F(CliTest, DemoPassesAndIsDeterministic) {
  const Result text = run({"demo"});
  EXPECT_EQ(text.code, 0) << text.err;
  EXPECT_NE(text.out.find("demo: PASS"), std::string::npos);
  const Result a = run({"demo", "--format", "json", "--jobs", "1"});
  const Result b = run({"demo", "--format", "json", "--jobs", "8"});
  const Result c = run({"demo", "--format", "json", "--jobs", "1"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_TRUE(j["ok"].get<bool>());
}

TEST_F(CliTest, IsMoebiusOnFrozenTableReportsWitness) {
  const Result r = run({"is-moebius", "--input", data("perturbed_table.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(R"(tuple: ["4","5","1","2","3"])"), std::string::npos) << r.out;
  const Result j = run({"moebius-check", "--input", data("perturbed_table.json"), "--format", "json"});
  EXPECT_EQ(j.code, 1);
  EXPECT_EQ(Json::parse(j.out)["moebius"]["witness"]["condition"], "A");
}

TEST_F(CliTest, ReconstructRoundTrip) {
  const Result r =
      run({"reconstruct", "--input", data("normalized_line.json"), "--scale", "a,b,w"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json out = Json::parse(r.out);
  EXPECT_EQ(out["schema_version"], 1);
  const SemiMetricSpace input = space_from_json(load_json_file(data("normalized_line.json")));
  EXPECT_EQ(space_from_json(out), input);
  EXPECT_EQ(run({"reconstruct", "--input", data("perturbed_table.json"), "--scale", "1,2,3"}).code,
            1);
}

TEST_F(CliTest, ExitCodeTaxonomy) {
  EXPECT_EQ(run({"validate", "--input", data("line.json")}).code, 0);
  EXPECT_EQ(run({"moebius", "--input", data("line.json")}).code, 0);
  EXPECT_EQ(run({"is-moebius", "--input", data("line.json")}).code, 0);
  EXPECT_EQ(run({"submoebius-check", "--input", data("perturbed_table.json")}).code, 0);

  // 2: malformed input or usage.
  const std::string broken = write("broken.json", "{\"points\": [");
  EXPECT_EQ(run({"validate", "--input", broken}).code, 2);
  EXPECT_EQ(run({"validate", "--input", (dir_ / "missing.json").string()}).code, 2);
  EXPECT_EQ(run({"validate"}).code, 2);
  EXPECT_EQ(run({"reconstruct", "--input", data("line.json")}).code, 2);
  EXPECT_EQ(run({"reconstruct", "--input", data("line.json"), "--scale", "0,1,9"}).code, 2);
  EXPECT_EQ(run({"demo", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  const Result named = run({"validate", "--input", write("field.json", R"({"points":["a","b"],
      "omega":null,"matrix":[["0","1"],["1","q"]]})")});
  EXPECT_EQ(named.code, 2);
  EXPECT_NE(named.err.find("matrix[1][1]"), std::string::npos) << named.err;

  // 1: the check ran and failed.
  const std::string asym = write("asym.json", R"({"points":["a","b","c","d"],"omega":null,
      "matrix":[["0","1","2","3"],["1","0","1","1"],["2","5","0","1"],["3","1","1","0"]]})");
  EXPECT_EQ(run({"validate", "--input", asym}).code, 1);

  // 3: a precondition of the requested operation does not hold.
  EXPECT_EQ(run({"is-moebius", "--input", asym}).code, 3);
  EXPECT_EQ(run({"hyperbolic", "perturb", "--input", data("cycle_model.json"), "--eps", "-1"}).code,
            3);
  SubMoebiusMap bent = testing::frozen_perturbed();
  bent.set({0, 1, 2, 3}, pinned_pattern(L4Kind::A, Scale::logarithmic));
  const std::string bent_file = write("bent.json", to_json(bent).dump());
  EXPECT_EQ(run({"submoebius-check", "--input", bent_file}).code, 1);
  const Result pre = run({"is-moebius", "--input", bent_file, "--format", "json"});
  EXPECT_EQ(pre.code, 3);
  EXPECT_EQ(Json::parse(pre.out)["error"]["exit_code"], 3);
}

TEST_F(CliTest, EquivalentSpaces) {
  const std::string scaled = write("scaled.json", R"({"points":["0","1","3","7"],"omega":null,
      "matrix":[["0","5","15","35"],["5","0","10","30"],["15","10","0","20"],["35","30","20","0"]]})");
  EXPECT_EQ(run({"equivalent", "--input", data("line.json"), "--input", scaled}).code, 0);
  const std::string bent = write("bent.json", R"({"points":["0","1","3","7"],"omega":null,
      "matrix":[["0","1","3","7"],["1","0","3","6"],["3","3","0","4"],["7","6","4","0"]]})");
  const Result r = run({"equivalent", "--input", data("line.json"), "--input", bent,
                        "--format", "json"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(Json::parse(r.out)["equivalence"].contains("witness"));
}

TEST_F(CliTest, HyperbolicPipeline) {
  const std::string tree = write("tree.json", R"({"root":"r","edges":[["r","a",1],["r","b",1],
      ["a","x",1],["a","y",1],["b","z",1],["b","u",1]]})");
  const Result model = run({"hyperbolic", "build", "--input", tree});
  ASSERT_EQ(model.code, 0) << model.err;
  const std::string model_file = write("model.json", model.out);
  EXPECT_EQ(Json::parse(model.out)["h"], "0");

  const Result raw = run({"hyperbolic", "perturb", "--model", data("cycle_model.json"),
                          "--seed", "1"});
  ASSERT_EQ(raw.code, 0);
  const std::string raw_file = write("raw.json", raw.out);
  const Result sym = run({"hyperbolic", "symmetrize", "--input", raw_file});
  ASSERT_EQ(sym.code, 0);
  EXPECT_EQ(table_from_json(Json::parse(sym.out)), testing::frozen_perturbed());

  EXPECT_EQ(run({"hyperbolic", "deviation", "--model", model_file}).code, 0);
  const Result dev = run({"hyperbolic", "deviation", "--model", data("cycle_model.json"),
                          "--format", "json"});
  EXPECT_EQ(dev.code, 0);
  EXPECT_TRUE(Json::parse(dev.out)["deviation"]["within_sqrt96_h"].get<bool>());
  EXPECT_EQ(run({"hyperbolic", "frobnicate", "--input", tree}).code, 2);
}

TEST_F(CliTest, TopologyCommands) {
  const Result s = run({"topology", "sandwich", "--model", data("cycle_model.json"),
                        "--scale", "1,2,3", "--format", "json"});
  EXPECT_EQ(s.code, 0) << s.err;
  const Json j = Json::parse(s.out);
  EXPECT_TRUE(j["standard"]["ok"].get<bool>());
  EXPECT_TRUE(j["submoebius"]["ok"].get<bool>());
  EXPECT_EQ(run({"topology", "compare", "--input", data("line.json")}).code, 0);
}

TEST_F(CliTest, JsonReportsAreJobIndependent) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"is-moebius", "--input", data("perturbed_table.json")},
           {"topology", "sandwich", "--model", data("cycle_model.json")},
           {"hyperbolic", "deviation", "--model", data("cycle_model.json")}}) {
    auto one = args;
    auto eight = args;
    one.insert(one.end(), {"--format", "json", "--jobs", "1"});
    eight.insert(eight.end(), {"--format", "json", "--jobs", "8"});
    EXPECT_EQ(run(one).out, run(eight).out) << args[0];
  }
}

}  // namespace
}  // namespace moebius
