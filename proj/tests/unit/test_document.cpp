#include <chainproj/document.hpp>
#include <chainproj/metric.hpp>

#include <gtest/gtest.h>

#include <algorithm>

#include "expect_error.hpp"

using namespace chainproj;
using nlohmann::json;

TEST(Document, RoundTripIsBitExact) {
  for (const MetricPoset& mp : {lattice_1p1(4, 12), simplex_config(4, Rational(3, 2), 10)}) {
    std::string first = to_json(mp.poset, mp.chains).dump();
    PosetDocument doc = parse_document(first);
    EXPECT_EQ(to_json(doc.poset, doc.chains).dump(), first);
    for (EventId a : mp.poset.events())
      for (EventId b : mp.poset.events()) ASSERT_EQ(doc.poset.leq(a, b), mp.poset.leq(a, b));
    EXPECT_TRUE(doc.poset.frozen());
  }
}

TEST(Document, RandomDagRoundTrip) {
  Poset p = random_dag(120, 0.04, 5);
  std::string text = to_json(p, {}).dump();
  PosetDocument doc = parse_document(text);
  EXPECT_EQ(doc.poset.cover_pairs(), p.cover_pairs());
  EXPECT_EQ(to_json(doc.poset, doc.chains).dump(), text);
}

TEST(Document, CoversAreTheReduction) {
  json j = {{"events", {0, 1, 2}}, {"covers", {{0, 1}, {1, 2}, {0, 2}}}, {"chains", json::array()}};
  PosetDocument doc = document_from_json(j);
  json out = to_json(doc.poset, doc.chains);
  EXPECT_EQ(out["covers"].size(), 2u);
}

TEST(Document, ValuationsAreCanonicalRationals) {
  MetricPoset mp = simplex_config(3, 1, 3);
  json j = to_json(mp.poset, mp.chains);
  EXPECT_EQ(j["chains"][0]["valuations"][1], "1/1");
}

TEST(Document, SchemaErrors) {
  EXPECT_ERROR_CODE(parse_document("{not json"), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(parse_document(R"({"covers":[]})"), ErrorCode::ParseError);
  EXPECT_ERROR_CODE(parse_document(R"({"events":[0,1],"covers":[[0,1],[1,0]],"chains":[]})"),
                    ErrorCode::CycleViolation);
  EXPECT_ERROR_CODE(parse_document(R"({"events":[0,0],"covers":[],"chains":[]})"), ErrorCode::DuplicateEvent);
  EXPECT_ERROR_CODE(parse_document(R"({"events":[0],"covers":[[0,4]],"chains":[]})"), ErrorCode::UnknownEvent);
  EXPECT_ERROR_CODE(
      parse_document(R"({"events":[0,1],"covers":[],"chains":[{"id":"A","events":[0,1],"valuations":["0","1"]}]})"),
      ErrorCode::InvalidChain);
  EXPECT_ERROR_CODE(read_document("/nonexistent/poset.json"), ErrorCode::IoError);
}

TEST(Document, DotHasOneEdgePerCover) {
  Poset p;
  for (std::uint32_t i = 0; i < 3; ++i) p.add_event(EventId{i});
  p.add_influence(EventId{0}, EventId{1});
  p.add_influence(EventId{1}, EventId{2});
  std::string dot = to_dot(p);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t edges = 0;
  for (std::size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 2)) ++edges;
  EXPECT_EQ(edges, 2u);
}
