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

#ifndef ESSENTIA_GRAPH_H_
#define ESSENTIA_GRAPH_H_

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "essentia/compat.h"
#include "essentia/corpus.h"

namespace essentia {

using NodeId = std::uint32_t;
using SupportSet = std::set<SentenceId>;

enum class NodeKind { kStart, kEnd, kWord };

std::string_view NodeKindName(NodeKind kind);

struct Occurrence {
  SentenceId sentence{};
  std::uint32_t position = 0;

  auto operator<=>(const Occurrence &) const = default;
};

struct Node {
  NodeId id = 0;
  std::string label;
  NodeKind kind = NodeKind::kWord;
  // Sorted; at most one entry per sentence.
  std::vector<Occurrence> occurrences;
};

// Directed graph of merged tokens between a unique START and END node. Each
// edge carries the ids of the sentences that traverse it.
//
// Graphs produced by ContractGroup, AssembleGraph and StripPunctuation are
// canonical: node ids follow TopologicalOrder, so START is 0 and END is the
// last id.
class WordAlignmentGraph {
 public:
  using EdgeMap = std::map<std::pair<NodeId, NodeId>, SupportSet>;

  // Creates START and END.
  WordAlignmentGraph();

  NodeId AddWordNode(std::string label, std::vector<Occurrence> occurrences);
  void AddEdge(NodeId from, NodeId to, SentenceId support);
  void AddEdge(NodeId from, NodeId to, const SupportSet &support);

  NodeId start() const { return start_; }
  NodeId end() const { return end_; }
  const Node &node(NodeId id) const { return nodes_.at(id); }
  const std::vector<Node> &nodes() const { return nodes_; }
  const EdgeMap &edges() const { return edges_; }
  std::size_t word_count() const { return nodes_.size() - 2; }

  // Successor ids in ascending order.
  std::vector<NodeId> Successors(NodeId id) const;
  std::size_t OutDegree(NodeId id) const;
  bool HasEdge(NodeId from, NodeId to) const;
  // nullptr when the edge is absent.
  const SupportSet *EdgeSupport(NodeId from, NodeId to) const;

  // Node holding token `position` of `sentence`, if any.
  const NodeId *FindOccurrence(SentenceId sentence,
                               std::uint32_t position) const;

  // START, the sentence's nodes in token order, END. Empty when the sentence
  // has no occurrences in the graph.
  std::vector<NodeId> SentencePath(SentenceId sentence) const;
  std::set<SentenceId> SentenceIds() const;

 private:
  friend WordAlignmentGraph Canonicalize(const WordAlignmentGraph &graph);

  std::vector<Node> nodes_;
  EdgeMap edges_;
  std::map<Occurrence, NodeId> occurrence_index_;
  NodeId start_ = 0;
  NodeId end_ = 1;
};

// Kahn's algorithm. Among ready nodes START comes first, END last, and word
// nodes by their smallest (sentence, position) occurrence, then id. Throws
// kCycleDetected.
std::vector<NodeId> TopologicalOrder(const WordAlignmentGraph &graph);

// Relabels node ids to their topological rank. Throws kCycleDetected.
WordAlignmentGraph Canonicalize(const WordAlignmentGraph &graph);

WordAlignmentGraph BuildLineGraph(const Sentence &sentence);

// Contracts every aligned token pair of the group into one node.
// Throws kCycleDetected if the contraction is not acyclic.
WordAlignmentGraph ContractGroup(
    const CompatibleGroup &group,
    const std::unordered_map<SentenceId, const Sentence *> &sentences);

// Disjoint union of per-group graphs under one START and one END.
WordAlignmentGraph AssembleGraph(std::span<const WordAlignmentGraph> groups);

// Convenience: contracts each group and assembles the result.
WordAlignmentGraph BuildGraph(const Document &doc,
                              std::span<const CompatibleGroup> groups);

// Drops punctuation word nodes and reconnects each sentence around them.
WordAlignmentGraph StripPunctuation(const WordAlignmentGraph &graph);

// Structural checks: single START/END with correct degrees, supported edges,
// occurrence injectivity, acyclicity and the sentence-path property. Returns
// human-readable problems; empty when valid.
std::vector<std::string> ValidateGraph(const WordAlignmentGraph &graph);

// Serialized graph ("wag-1"): nodes in id order, edges by (from, to).
std::string GraphToJson(const WordAlignmentGraph &graph);
std::string GraphToDot(const WordAlignmentGraph &graph,
                       std::string_view name = "wag");

std::unordered_map<SentenceId, const Sentence *> IndexById(const Document &doc);

}  // namespace essentia

#endif  // ESSENTIA_GRAPH_H_
