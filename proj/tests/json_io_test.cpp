#include <gtest/gtest.h>

#include "moebius/json_io.hpp"
#include "support.hpp"

namespace moebius {
namespace {

TEST(SpaceJson, RoundTrip) {
  for (const auto& s : {testing::line_space(), testing::normalized_line_space()}) {
    EXPECT_EQ(space_from_json(to_json(s)), s);
  }
  const SemiMetricSpace loaded = space_from_json(load_json_file(testing::data_path("line.json")));
  EXPECT_EQ(loaded, testing::line_space());
}

TEST(SpaceJson, NamesTheBadField) {
  Json j = to_json(testing::line_space());
  j["matrix"][1][2] = "x";
  try {
    space_from_json(j);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("matrix[1][2]"), std::string::npos) << e.what();
  }
  j = to_json(testing::line_space());
  j["matrix"].erase(3);
  EXPECT_THROW(space_from_json(j), InputError);
  j = to_json(testing::line_space());
  j["omega"] = "nowhere";
  EXPECT_THROW(space_from_json(j), InputError);
  j = to_json(testing::line_space());
  j.erase("points");
  EXPECT_THROW(space_from_json(j), InputError);
}

TEST(TableJson, RoundTripAndBareList) {
  const SubMoebiusMap m = moebius_of(testing::line_space());
  EXPECT_EQ(table_from_json(to_json(m)), m);

  const Json full = to_json(m);
  Json bare = Json::array();
  for (const auto& entry : full["entries"]) {
    bare.push_back(entry);
  }
  const SubMoebiusMap from_bare = table_from_json(bare);
  EXPECT_EQ(from_bare.labels(), m.labels());
  EXPECT_EQ(from_bare, m);
}

TEST(TableJson, RejectsInadmissibleAndDuplicates) {
  Json j = to_json(moebius_of(testing::line_space()));
  Json dup = j;
  dup["entries"].push_back(j["entries"][0]);
  EXPECT_THROW(table_from_json(dup), InputError);
  Json bad = j;
  bad["entries"][0]["tuple"] = {"0", "0", "0", "1"};
  EXPECT_THROW(table_from_json(bad), InputError);
}

TEST(ModelJson, RoundTripAndTree) {
  const GromovProductModel m = build_model(testing::binary_tree(2));
  EXPECT_EQ(model_from_json(to_json(m)), m);
  const Json tree = Json::parse(R"({"root":"r","edges":[["r","a",1],["r","b","3/2"],
                                   ["a","x",1],["a","y",1]]})");
  const GromovProductModel t = build_model(tree_from_json(tree));
  EXPECT_EQ(t.boundary(), (Labels{"b", "x", "y"}));
  EXPECT_EQ(t.gp(1, 2), ExtReal(1L));
}

TEST(ScaleTripleText, Parses) {
  const Labels labels{"a", "b", "c", "w"};
  const ScaleTriple a = parse_scale_triple("a,b,w", labels);
  EXPECT_EQ(a, ScaleTriple::make(0, 1, 3));
  EXPECT_THROW(parse_scale_triple("a,b", labels), InputError);
  EXPECT_THROW(parse_scale_triple("a,b,q", labels), InputError);
  EXPECT_THROW(parse_scale_triple("a,a,b", labels), Error);
}

TEST(ReportJson, VerdictCarriesBothSides) {
  const SubMoebiusMap m = testing::frozen_perturbed();
  const Json v = to_json(is_moebius(m), m.labels());
  EXPECT_FALSE(v["is_moebius"].get<bool>());
  EXPECT_EQ(v["witness"]["tuple"], Json::parse(R"(["4","5","1","2","3"])"));
  EXPECT_EQ(v["witness"]["lhs"], "-829/2000");
  EXPECT_EQ(v["witness"]["rhs"], "-1171/6000");
}

}  // namespace
}  // namespace moebius
