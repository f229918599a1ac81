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

// Fixtures, random generators and brute-force oracles shared by the unit,
// property and acceptance suites. Nothing here calls into the code paths it
// is used to check.

#ifndef ESSENTIA_TESTS_TESTING_H_
#define ESSENTIA_TESTS_TESTING_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "essentia/corpus.h"
#include "essentia/graph.h"

namespace essentia::testing {

inline const std::vector<std::string> &EconomyLines() {
  static const std::vector<std::string> lines = {
      "The world economy has fully recovered from the crisis.",
      "The world economy has shrugged off the crisis completely.",
      "The world economy has gotten rid of the crisis already.",
  };
  return lines;
}

// Sentence ids 1..n in line order.
inline Document MakeDocument(const std::vector<std::string> &lines,
                             std::string label = "test",
                             const MaskConfig &mask = {}) {
  Document doc;
  doc.label = std::move(label);
  std::uint32_t id = 0;
  for (const std::string &line : lines) {
    doc.sentences.push_back(
        MaskSpecial(Tokenize(line, SentenceId{++id}), mask));
  }
  return doc;
}

// Random document over a tiny vocabulary, so that alignments are dense and
// order conflicts frequent.
inline Document RandomDocument(std::mt19937 &rng) {
  static const std::vector<std::string> vocab = {"a", "b",  "c",   "d",
                                                 "e", "go", "the", "."};
  std::uniform_int_distribution<int> n_sentences(2, 6);
  std::uniform_int_distribution<int> length(1, 8);
  std::uniform_int_distribution<std::size_t> word(0, vocab.size() - 1);
  std::vector<std::string> lines;
  const int n = n_sentences(rng);
  for (int s = 0; s < n; ++s) {
    std::string line;
    const int len = length(rng);
    for (int k = 0; k < len; ++k) {
      if (!line.empty()) line += ' ';
      line += vocab[word(rng)];
    }
    lines.push_back(line);
  }
  return MakeDocument(lines, "random");
}

// Template sentences of 9-10 words with interchangeable slots.
inline std::vector<std::string> TemplateCorpus(std::size_t n,
                                               std::uint32_t seed) {
  static const std::vector<std::vector<std::string>> slots = {
      {"can you", "could you", "please", "would you"},
      {"show me", "tell me", "give me", "find me", "get me"},
      {"the weather", "the forecast", "the temperature", "the rain outlook"},
      {"for", "in", "around", "near"},
      {"Boston", "the city", "my area", "Paris", "the airport"},
      {"tomorrow", "today", "tonight", "this weekend", "next week"},
  };
  std::mt19937 rng(seed);
  std::vector<std::string> out;
  while (out.size() < n) {
    std::string line;
    for (const auto &options : slots) {
      std::uniform_int_distribution<std::size_t> pick(0, options.size() - 1);
      if (!line.empty()) line += ' ';
      line += options[pick(rng)];
    }
    const std::size_t words = SplitWords(line).size();
    if (words < 9 || words > 10) continue;
    out.push_back(line + "?");
  }
  return out;
}

// Random DAG with START = node 0, END = node 1 and word nodes numbered in a
// random topological order. Edge supports are random non-empty subsets of
// sentence ids 1..3.
inline WordAlignmentGraph RandomDag(std::mt19937 &rng, int max_nodes = 12) {
  std::uniform_int_distribution<int> n_words(1, max_nodes - 2);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> subset(1, 7);
  static const std::vector<std::string> labels = {"a", "b", "c", "d"};
  std::uniform_int_distribution<std::size_t> label(0, labels.size() - 1);

  WordAlignmentGraph g;
  const int n = n_words(rng);
  std::vector<NodeId> words;
  for (int k = 0; k < n; ++k)
    words.push_back(g.AddWordNode(labels[label(rng)], {}));
  auto support = [&]() {
    SupportSet s;
    const int bits = subset(rng);
    for (std::uint32_t b = 0; b < 3; ++b) {
      if (bits & (1 << b)) s.insert(SentenceId{b + 1});
    }
    return s;
  };
  for (int i = 0; i < n; ++i) {
    if (i == 0 || coin(rng) < 0.3) g.AddEdge(g.start(), words[i], support());
    if (i == n - 1 || coin(rng) < 0.3) g.AddEdge(words[i], g.end(), support());
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng) < 0.35) g.AddEdge(words[i], words[j], support());
    }
  }
  if (coin(rng) < 0.2) g.AddEdge(g.start(), g.end(), support());
  return g;
}

// (anchor_from, anchor_to, internal nodes of each path in the family)
using FamilyKey = std::tuple<NodeId, NodeId, std::set<std::vector<NodeId>>>;

struct OracleResult {
  std::set<FamilyKey> families;
  std::size_t largest_group = 0;
};

// Enumerates every simple path between every node pair with no length
// bound, keeps attested ones (non-empty support intersection) whose internal
// nodes are all word nodes, and finds maximal internally-disjoint families
// of size >= 2 by subset enumeration. Returns nullopt when some anchor pair
// has more than `max_group` paths.
inline std::optional<OracleResult> BruteForceParallelPaths(
    const WordAlignmentGraph &g, std::size_t max_group = 18) {
  const auto &edges = g.edges();
  const std::size_t n = g.nodes().size();
  std::map<std::pair<NodeId, NodeId>, std::vector<std::vector<NodeId>>> groups;

  std::vector<NodeId> path;
  auto record = [&]() {
    if (path.size() < 3) return;
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
      if (g.node(path[k]).kind != NodeKind::kWord) return;
    }
    std::optional<SupportSet> support;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const SupportSet &s = edges.at({path[k], path[k + 1]});
      if (!support) {
        support = s;
        continue;
      }
      SupportSet both;
      for (SentenceId id : *support) {
        if (s.count(id)) both.insert(id);
      }
      support = both;
    }
    if (support->empty()) return;
    groups[{path.front(), path.back()}].emplace_back(path.begin() + 1,
                                                     path.end() - 1);
  };
  auto dfs = [&](auto &&self, NodeId at) -> void {
    record();
    for (const auto &[edge, s] : edges) {
      if (edge.first != at) continue;
      if (std::find(path.begin(), path.end(), edge.second) != path.end()) {
        continue;
      }
      path.push_back(edge.second);
      self(self, edge.second);
      path.pop_back();
    }
  };
  for (NodeId u = 0; u < n; ++u) {
    path = {u};
    dfs(dfs, u);
  }

  OracleResult result;
  for (const auto &[anchors, paths] : groups) {
    result.largest_group = std::max(result.largest_group, paths.size());
    if (paths.size() > max_group) return std::nullopt;
    const std::size_t k = paths.size();
    auto disjoint = [&](std::size_t a, std::size_t b) {
      for (NodeId x : paths[a]) {
        if (std::find(paths[b].begin(), paths[b].end(), x) != paths[b].end()) {
          return false;
        }
      }
      return true;
    };
    auto independent = [&](std::uint32_t mask) {
      for (std::size_t a = 0; a < k; ++a) {
        if (!(mask >> a & 1)) continue;
        for (std::size_t b = a + 1; b < k; ++b) {
          if ((mask >> b & 1) && !disjoint(a, b)) return false;
        }
      }
      return true;
    };
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      if (__builtin_popcount(mask) < 2 || !independent(mask)) continue;
      bool maximal = true;
      for (std::size_t extra = 0; extra < k && maximal; ++extra) {
        if (!(mask >> extra & 1) && independent(mask | (1u << extra))) {
          maximal = false;
        }
      }
      if (!maximal) continue;
      std::set<std::vector<NodeId>> family;
      for (std::size_t a = 0; a < k; ++a) {
        if (mask >> a & 1) family.insert(paths[a]);
      }
      result.families.emplace(anchors.first, anchors.second, family);
    }
  }
  return result;
}

// True when every input sentence walks START -> ... -> END over edges that
// carry its id, and the walk's labels equal its normal forms.
inline bool SentenceReplays(const WordAlignmentGraph &g, const Sentence &s) {
  std::vector<NodeId> nodes;
  for (const Token &t : s.tokens) {
    const NodeId *id = g.FindOccurrence(s.id, t.position);
    if (id == nullptr || g.node(*id).label != t.normal) return false;
    nodes.push_back(*id);
  }
  nodes.insert(nodes.begin(), g.start());
  nodes.push_back(g.end());
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const SupportSet *support = g.EdgeSupport(nodes[k], nodes[k + 1]);
    if (support == nullptr || !support->count(s.id)) return false;
  }
  return true;
}

inline bool IsTopologicalOrder(const WordAlignmentGraph &g,
                               const std::vector<NodeId> &order) {
  if (order.size() != g.nodes().size()) return false;
  std::vector<int> position(order.size(), -1);
  for (std::size_t k = 0; k < order.size(); ++k) {
    if (order[k] >= order.size() || position[order[k]] >= 0) return false;
    position[order[k]] = static_cast<int>(k);
  }
  for (const auto &[edge, support] : g.edges()) {
    if (position[edge.first] >= position[edge.second]) return false;
  }
  return true;
}

}  // namespace essentia::testing

#endif  // ESSENTIA_TESTS_TESTING_H_
