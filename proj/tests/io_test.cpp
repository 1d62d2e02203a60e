#include <gtest/gtest.h>

#include "distinguish/catalog.hpp"
#include "distinguish/error.hpp"
#include "distinguish/io.hpp"
#include "distinguish/report.hpp"

namespace distinguish {
namespace {

Json without_timing(Json report) {
  report.erase("timing_ms");
  return report;
}

TEST(ActionDocumentTest, NaturalWhenGeneratorActionOmitted) {
  Json doc = Json::parse(R"({"degree": 4, "generators": [[1,0,2,3], [1,2,3,0]]})");
  GroupAction a = parse_action_document(doc);
  EXPECT_EQ(a.order(), 24U);
  EXPECT_EQ(a.domain_size(), 4U);
}

TEST(ActionDocumentTest, RoundTripsEveryNamedAction) {
  for (const auto& named : named_actions()) {
    Json doc = action_document(named.action);
    GroupAction parsed = parse_action_document(doc);
    EXPECT_EQ(parsed.order(), named.action.order()) << named.name;
    EXPECT_EQ(parsed.domain_size(), named.action.domain_size()) << named.name;
    EXPECT_EQ(action_document(parsed), doc) << named.name;
  }
}

TEST(ActionDocumentTest, RepeatedGeneratorsAreMerged) {
  Json doc = Json::parse(R"({"degree": 2, "generators": [[1,0], [1,0]],
                             "domain_size": 2, "generator_action": [[1,0], [1,0]]})");
  EXPECT_EQ(parse_action_document(doc).order(), 2U);
  doc["generator_action"][1] = {0, 1};
  EXPECT_THROW(parse_action_document(doc), InputError);
}

TEST(ActionDocumentTest, Errors) {
  EXPECT_THROW(parse_action_document(Json::parse("[]")), InputError);
  EXPECT_THROW(parse_action_document(Json::parse(R"({"generators": []})")), InputError);
  EXPECT_THROW(parse_action_document(Json::parse(R"({"degree": 3, "generators": [[0,0,1]]})")),
               InputError);
  EXPECT_THROW(parse_action_document(Json::parse(
                   R"({"degree": 2, "generators": [[1,0]], "domain_size": 3,
                       "generator_action": [[1,2,0]]})")),
               InputError);
  EXPECT_THROW(parse_action_document(Json::parse(
                   R"({"degree": 2, "generators": [[1,0]], "domain_size": 2,
                       "generator_action": []})")),
               InputError);
}

TEST(GraphDocumentTest, RoundTrip) {
  for (const auto& g : named_graphs()) {
    Json doc = graph_document(g.graph);
    EXPECT_EQ(parse_graph_document(doc), g.graph) << g.name;
  }
}

TEST(GraphDocumentTest, Errors) {
  EXPECT_THROW(parse_graph_document(Json::parse(R"({"vertices": 3})")), InputError);
  EXPECT_THROW(parse_graph_document(Json::parse(R"({"vertices": 3, "edges": [[0]]})")),
               InputError);
  EXPECT_THROW(parse_graph_document(Json::parse(R"({"vertices": 3, "edges": [[0, 3]]})")),
               InputError);
  EXPECT_THROW(parse_graph_document(Json::parse(R"({"vertices": -1, "edges": []})")),
               InputError);
}

TEST(JsonTextTest, ReportsLocation) {
  try {
    parse_json_text("{\n  \"a\": ]", "doc.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("doc.json:2:", 0), 0U) << e.what();
  }
}

TEST(DigestTest, StableAndSensitive) {
  Json a = Json::parse(R"({"vertices": 3, "edges": [[0, 1]]})");
  Json b = Json::parse(R"({"vertices": 3, "edges": [[0, 2]]})");
  EXPECT_EQ(digest(a), digest(Json::parse(a.dump())));
  EXPECT_NE(digest(a), digest(b));
  EXPECT_EQ(digest(a).size(), 16U);
}

TEST(ReportTest, S3ConjugationExact) {
  Json report = action_report(action_document(conjugation_action(3)), {true, false, {}});
  EXPECT_EQ(report["exact"]["distinguishing_number"], 2);
  EXPECT_EQ(report["action"]["group_order"], 6);
}

TEST(ReportTest, TrivialAction) {
  Json report = action_report(action_document(trivial_action(symmetric_group(3), 2)), {});
  EXPECT_EQ(report["exact"]["distinguishing_number"], 1);
}

TEST(ReportTest, NaturalS4Construction) {
  Json report = action_report(action_document(natural_action(4)), {false, true, {}});
  const Json& c = report["construction"];
  EXPECT_EQ(c["label_count"], 4);
  EXPECT_EQ(c["bound"]["product"], 24);
  EXPECT_EQ(c["bound"]["group_order"], 24);
  EXPECT_TRUE(c["bound"]["holds"].get<bool>());
  EXPECT_FALSE(report.contains("exact"));
}

TEST(ReportTest, KMaxTooSmall) {
  Json report = action_report(action_document(natural_action(4)), {true, false, 2});
  EXPECT_TRUE(report["exact"]["distinguishing_number"].is_null());
  EXPECT_EQ(report["exact"]["k_max"], 2);
}

TEST(ReportTest, GraphModes) {
  Json c5 = graph_document(make_cycle(5));
  EXPECT_EQ(graph_report(c5, {})["exact"]["distinguishing_number"], 3);

  Json tree = graph_report(graph_document(make_figure7_tree()), {true, true, false, {}});
  EXPECT_LE(tree["tree"]["label_count"].get<int>(), 5);
  EXPECT_EQ(tree["exact"]["distinguishing_number"], 3);

  GraphRequest big;
  big.limits.max_vertices = 14;
  EXPECT_EQ(graph_report(graph_document(make_figure2_graphs()[0]), big)["exact"]
                        ["distinguishing_number"],
            4);
  EXPECT_THROW(graph_report(c5, {false, true, false, {}}), PreconditionError);
  EXPECT_THROW(graph_report(graph_document(make_figure2_graphs()[2]), {}), ResourceError);
}

TEST(ReportTest, DeterministicApartFromTiming) {
  Json doc = action_document(s4_inverse_pair_action());
  ActionRequest all{true, true, {}};
  EXPECT_EQ(without_timing(action_report(doc, all)).dump(),
            without_timing(action_report(doc, all)).dump());
}

}  // namespace
}  // namespace distinguish
