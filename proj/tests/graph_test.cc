// Copyright 2026 The Essentia Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "essentia/graph.h"

#include <map>
#include <numeric>
#include <random>

#include "essentia/error.h"
#include "gtest/gtest.h"
#include "nlohmann/json.hpp"
#include "testing.h"

namespace essentia {
namespace {

WordAlignmentGraph EconomyGraph(Document *doc_out = nullptr) {
  Document doc = testing::MakeDocument(testing::EconomyLines());
  auto groups = PartitionIntoGroups(doc, AlignAllPairs(doc, {}));
  WordAlignmentGraph g = BuildGraph(doc, groups);
  if (doc_out != nullptr) *doc_out = std::move(doc);
  return g;
}

std::vector<std::string> Labels(const WordAlignmentGraph &g,
                                const std::vector<NodeId> &ids) {
  std::vector<std::string> out;
  for (NodeId id : ids) out.push_back(g.node(id).label);
  return out;
}

// Node count of the contraction computed independently: tokens minus the
// number of successful unions over all aligned pairs in the group.
std::size_t ExpectedWordNodes(const Document &doc,
                              const CompatibleGroup &group) {
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> index;
  std::vector<std::size_t> parent;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (SentenceId id : group.members) {
    for (const Sentence &s : doc.sentences) {
      if (s.id != id) continue;
      for (const Token &t : s.tokens) {
        index[{ToInt(id), t.position}] = parent.size();
        parent.push_back(parent.size());
      }
    }
  }
  std::size_t count = parent.size();
  for (const auto &[key, a] : group.alignments.canonical()) {
    for (const AlignedPair &p : a.pairs) {
      auto x = find(index.at({ToInt(a.left), p.left}));
      auto y = find(index.at({ToInt(a.right), p.right}));
      if (x != y) {
        parent[x] = y;
        --count;
      }
    }
  }
  return count;
}

TEST(LineGraphTest, Counts) {
  WordAlignmentGraph three = BuildLineGraph(Tokenize("book a table"));
  EXPECT_EQ(three.nodes().size(), 5u);
  EXPECT_EQ(three.edges().size(), 4u);
  EXPECT_EQ(Labels(three, three.SentencePath(SentenceId{1})),
            (std::vector<std::string>{"START", "book", "a", "table", "END"}));

  WordAlignmentGraph one = BuildLineGraph(Tokenize("hello"));
  EXPECT_EQ(one.nodes().size(), 3u);
  EXPECT_EQ(one.edges().size(), 2u);

  WordAlignmentGraph fig = BuildLineGraph(Tokenize(testing::EconomyLines()[0]));
  EXPECT_EQ(fig.nodes().size(), 12u);
  EXPECT_EQ(fig.edges().size(), 11u);
  EXPECT_TRUE(ValidateGraph(fig).empty());
}

TEST(ContractGroupTest, Economy) {
  Document doc;
  WordAlignmentGraph g = EconomyGraph(&doc);
  EXPECT_TRUE(ValidateGraph(g).empty());
  EXPECT_EQ(g.nodes().size(), 19u);
  EXPECT_EQ(g.edges().size(), 22u);
  EXPECT_EQ(g.start(), 0u);
  EXPECT_EQ(g.end(), 18u);

  std::size_t shared = 0;
  for (const Node &n : g.nodes()) {
    if (n.occurrences.size() == 3) ++shared;
  }
  // the, world, economy, has, the, crisis, "."
  EXPECT_EQ(shared, 7u);

  const NodeId has = *g.FindOccurrence(SentenceId{1}, 3);
  EXPECT_EQ(g.node(has).label, "has");
  EXPECT_EQ(g.OutDegree(has), 3u);
  const NodeId crisis = *g.FindOccurrence(SentenceId{1}, 8);
  EXPECT_EQ(g.node(crisis).label, "crisis");
  EXPECT_EQ(g.OutDegree(crisis), 3u);
  for (const Sentence &s : doc.sentences) {
    EXPECT_TRUE(testing::SentenceReplays(g, s)) << ToInt(s.id);
  }
  EXPECT_EQ(*g.EdgeSupport(g.start(), *g.FindOccurrence(SentenceId{2}, 0)),
            (SupportSet{SentenceId{1}, SentenceId{2}, SentenceId{3}}));
}

TEST(ContractGroupTest, IdenticalSentencesGiveALine) {
  Document doc = testing::MakeDocument({"play some jazz", "play some jazz"});
  auto groups = PartitionIntoGroups(doc, AlignAllPairs(doc, {}));
  ASSERT_EQ(groups.size(), 1u);
  WordAlignmentGraph g = BuildGraph(doc, groups);
  EXPECT_EQ(g.nodes().size(), 5u);
  EXPECT_EQ(g.edges().size(), 4u);
  for (const auto &[edge, support] : g.edges()) EXPECT_EQ(support.size(), 2u);
}

TEST(ContractGroupTest, NodeCountMatchesUnionFind) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    Document doc = testing::RandomDocument(rng);
    auto groups = PartitionIntoGroups(doc, AlignAllPairs(doc, {}));
    std::size_t expected = 0;
    const auto index = IndexById(doc);
    for (const CompatibleGroup &group : groups) {
      WordAlignmentGraph part = ContractGroup(group, index);
      EXPECT_EQ(part.word_count(), ExpectedWordNodes(doc, group));
      expected += part.word_count();
    }
    WordAlignmentGraph g = BuildGraph(doc, groups);
    EXPECT_EQ(g.word_count(), expected);
    EXPECT_TRUE(ValidateGraph(g).empty());
  }
}

TEST(ContractGroupTest, CyclicContractionThrows) {
  // Alignments that would contract to a cycle are rejected by
  // ContractGroup even when handed in directly.
  Document doc = testing::MakeDocument({"x y", "y x"});
  Alignment a;
  a.left = SentenceId{1};
  a.right = SentenceId{2};
  a.pairs = {{0, 1, 1.0}, {1, 0, 1.0}};
  CompatibleGroup group;
  group.members = {SentenceId{1}, SentenceId{2}};
  group.alignments.Insert(a);
  try {
    ContractGroup(group, IndexById(doc));
    FAIL() << "expected CycleDetected";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
  }
}

TEST(AssembleGraphTest, DisjointUnion) {
  WordAlignmentGraph a = BuildLineGraph(Tokenize("turn it up", SentenceId{1}));
  WordAlignmentGraph b = BuildLineGraph(Tokenize("stop", SentenceId{2}));
  std::vector<WordAlignmentGraph> parts = {a, b};
  WordAlignmentGraph g = AssembleGraph(parts);
  EXPECT_EQ(g.word_count(), 4u);
  EXPECT_EQ(g.edges().size(), 6u);
  EXPECT_EQ(g.OutDegree(g.start()), 2u);
  EXPECT_TRUE(ValidateGraph(g).empty());
  EXPECT_EQ(Labels(g, g.SentencePath(SentenceId{2})),
            (std::vector<std::string>{"START", "stop", "END"}));

  std::vector<WordAlignmentGraph> single = {a};
  EXPECT_EQ(AssembleGraph(single).nodes().size(), a.nodes().size());
}

TEST(TopologicalOrderTest, BackEdgeIsDetected) {
  WordAlignmentGraph g = EconomyGraph();
  EXPECT_TRUE(testing::IsTopologicalOrder(g, TopologicalOrder(g)));
  const NodeId has = *g.FindOccurrence(SentenceId{1}, 3);
  const NodeId world = *g.FindOccurrence(SentenceId{1}, 1);
  g.AddEdge(has, world, SentenceId{1});
  try {
    TopologicalOrder(g);
    FAIL() << "expected CycleDetected";
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kCycleDetected);
  }
  EXPECT_FALSE(ValidateGraph(g).empty());
}

TEST(TopologicalOrderTest, CanonicalIdsAreRanks) {
  WordAlignmentGraph g = EconomyGraph();
  auto order = TopologicalOrder(g);
  std::vector<NodeId> ranks(order.size());
  std::iota(ranks.begin(), ranks.end(), 0);
  EXPECT_EQ(order, ranks);
  for (const auto &[edge, support] : g.edges())
    EXPECT_LT(edge.first, edge.second);
}

TEST(SerializationTest, JsonShape) {
  WordAlignmentGraph g = EconomyGraph();
  auto j = nlohmann::json::parse(GraphToJson(g));
  EXPECT_EQ(j["schema"], "wag-1");
  EXPECT_EQ(j["start"], 0);
  EXPECT_EQ(j["end"], 18);
  ASSERT_EQ(j["nodes"].size(), 19u);
  EXPECT_EQ(j["nodes"][0]["kind"], "START");
  EXPECT_EQ(j["nodes"][1]["label"], "the");
  EXPECT_EQ(j["nodes"][1]["occurrences"].size(), 3u);
  ASSERT_EQ(j["edges"].size(), 22u);
  EXPECT_EQ(j["edges"][0]["from"], 0);
  EXPECT_EQ(j["edges"][0]["support"], nlohmann::json::parse("[1,2,3]"));
  EXPECT_EQ(GraphToJson(g), GraphToJson(EconomyGraph()));
}

TEST(SerializationTest, DotShape) {
  const std::string dot = GraphToDot(EconomyGraph(), "fig");
  EXPECT_EQ(dot.rfind("digraph \"fig\" {", 0), 0u);
  EXPECT_NE(dot.find("n0 -> n1 [weight=3];"), std::string::npos);
  EXPECT_NE(dot.find("label=\"recovered\""), std::string::npos);
  EXPECT_EQ(dot.back(), '\n');
}

TEST(StripPunctuationTest, RemovesPeriodAndReconnects) {
  Document doc;
  WordAlignmentGraph g = StripPunctuation(EconomyGraph(&doc));
  EXPECT_TRUE(ValidateGraph(g).empty());
  EXPECT_EQ(g.nodes().size(), 18u);
  for (const Node &n : g.nodes()) EXPECT_NE(n.label, ".");
  const NodeId crisis = *g.FindOccurrence(SentenceId{1}, 8);
  EXPECT_TRUE(g.HasEdge(crisis, g.end()));
  EXPECT_EQ(*g.EdgeSupport(crisis, g.end()), (SupportSet{SentenceId{1}}));
  EXPECT_EQ(Labels(g, g.SentencePath(SentenceId{2})).back(), "END");
}

}  // namespace
}  // namespace essentia
