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

#include <algorithm>
#include <queue>
#include <sstream>
#include <tuple>

#include "disjoint_sets.h"
#include "essentia/error.h"
#include "json.hpp"

namespace essentia {
namespace {

using OrderKey = std::tuple<int, std::uint32_t, std::uint32_t, NodeId>;

OrderKey ReadyKey(const Node &node) {
  int rank = node.kind == NodeKind::kStart  ? 0
             : node.kind == NodeKind::kWord ? 1
                                            : 2;
  if (node.occurrences.empty()) {
    return {rank, UINT32_MAX, UINT32_MAX, node.id};
  }
  const Occurrence &first = node.occurrences.front();
  return {rank, ToInt(first.sentence), first.position, node.id};
}

std::string SmallestNormal(
    const std::vector<Occurrence> &occurrences,
    const std::unordered_map<SentenceId, const Sentence *> &sentences) {
  std::string best;
  for (const Occurrence &o : occurrences) {
    const std::string &normal =
        sentences.at(o.sentence)->tokens.at(o.position).normal;
    if (best.empty() || normal < best) best = normal;
  }
  return best;
}

std::string DotEscape(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string_view NodeKindName(NodeKind kind) {
  switch (kind) {
    case NodeKind::kStart:
      return "START";
    case NodeKind::kEnd:
      return "END";
    case NodeKind::kWord:
      return "WORD";
  }
  return "WORD";
}

WordAlignmentGraph::WordAlignmentGraph() {
  nodes_.push_back({0, "START", NodeKind::kStart, {}});
  nodes_.push_back({1, "END", NodeKind::kEnd, {}});
}

NodeId WordAlignmentGraph::AddWordNode(std::string label,
                                       std::vector<Occurrence> occurrences) {
  const auto id = static_cast<NodeId>(nodes_.size());
  std::sort(occurrences.begin(), occurrences.end());
  for (const Occurrence &o : occurrences) occurrence_index_[o] = id;
  nodes_.push_back(
      {id, std::move(label), NodeKind::kWord, std::move(occurrences)});
  return id;
}

void WordAlignmentGraph::AddEdge(NodeId from, NodeId to, SentenceId support) {
  edges_[{from, to}].insert(support);
}

void WordAlignmentGraph::AddEdge(NodeId from, NodeId to,
                                 const SupportSet &support) {
  edges_[{from, to}].insert(support.begin(), support.end());
}

std::vector<NodeId> WordAlignmentGraph::Successors(NodeId id) const {
  std::vector<NodeId> out;
  for (auto it = edges_.lower_bound({id, 0});
       it != edges_.end() && it->first.first == id; ++it) {
    out.push_back(it->first.second);
  }
  return out;
}

std::size_t WordAlignmentGraph::OutDegree(NodeId id) const {
  std::size_t n = 0;
  for (auto it = edges_.lower_bound({id, 0});
       it != edges_.end() && it->first.first == id; ++it) {
    ++n;
  }
  return n;
}

bool WordAlignmentGraph::HasEdge(NodeId from, NodeId to) const {
  return edges_.count({from, to}) > 0;
}

const SupportSet *WordAlignmentGraph::EdgeSupport(NodeId from,
                                                  NodeId to) const {
  auto it = edges_.find({from, to});
  return it == edges_.end() ? nullptr : &it->second;
}

const NodeId *WordAlignmentGraph::FindOccurrence(SentenceId sentence,
                                                 std::uint32_t position) const {
  auto it = occurrence_index_.find({sentence, position});
  return it == occurrence_index_.end() ? nullptr : &it->second;
}

std::vector<NodeId> WordAlignmentGraph::SentencePath(
    SentenceId sentence) const {
  std::vector<NodeId> path;
  for (auto it = occurrence_index_.lower_bound({sentence, 0});
       it != occurrence_index_.end() && it->first.sentence == sentence; ++it) {
    if (path.empty()) path.push_back(start_);
    path.push_back(it->second);
  }
  if (!path.empty()) path.push_back(end_);
  return path;
}

std::set<SentenceId> WordAlignmentGraph::SentenceIds() const {
  std::set<SentenceId> ids;
  for (const auto &[occ, node] : occurrence_index_) ids.insert(occ.sentence);
  for (const auto &[edge, support] : edges_) {
    ids.insert(support.begin(), support.end());
  }
  return ids;
}

std::vector<NodeId> TopologicalOrder(const WordAlignmentGraph &graph) {
  const auto &nodes = graph.nodes();
  std::vector<int> indegree(nodes.size(), 0);
  for (const auto &[edge, support] : graph.edges()) ++indegree[edge.second];

  std::priority_queue<OrderKey, std::vector<OrderKey>, std::greater<>> ready;
  for (const Node &n : nodes) {
    if (indegree[n.id] == 0) ready.push(ReadyKey(n));
  }
  std::vector<NodeId> order;
  order.reserve(nodes.size());
  while (!ready.empty()) {
    NodeId id = std::get<3>(ready.top());
    ready.pop();
    order.push_back(id);
    for (NodeId next : graph.Successors(id)) {
      if (--indegree[next] == 0) ready.push(ReadyKey(nodes[next]));
    }
  }
  if (order.size() != nodes.size()) {
    throw Error(ErrorCode::kCycleDetected,
                "word-alignment graph contains a cycle");
  }
  return order;
}

WordAlignmentGraph Canonicalize(const WordAlignmentGraph &graph) {
  const std::vector<NodeId> order = TopologicalOrder(graph);
  std::vector<NodeId> rank(order.size());
  for (NodeId r = 0; r < order.size(); ++r) rank[order[r]] = r;

  // The constructor's fixed START/END slots are rebuilt in rank order.
  WordAlignmentGraph out;
  std::vector<Node> relabeled(order.size());
  for (NodeId r = 0; r < order.size(); ++r) {
    relabeled[r] = graph.node(order[r]);
    relabeled[r].id = r;
  }
  out.nodes_.clear();
  out.occurrence_index_.clear();
  for (const Node &n : relabeled) {
    if (n.kind == NodeKind::kStart) out.start_ = n.id;
    if (n.kind == NodeKind::kEnd) out.end_ = n.id;
    for (const Occurrence &o : n.occurrences) {
      out.occurrence_index_[o] = n.id;
    }
    out.nodes_.push_back(n);
  }
  for (const auto &[edge, support] : graph.edges()) {
    out.edges_[{rank[edge.first], rank[edge.second]}] = support;
  }
  return out;
}

WordAlignmentGraph BuildLineGraph(const Sentence &sentence) {
  WordAlignmentGraph g;
  NodeId prev = g.start();
  for (const Token &t : sentence.tokens) {
    NodeId id = g.AddWordNode(t.normal, {{sentence.id, t.position}});
    g.AddEdge(prev, id, sentence.id);
    prev = id;
  }
  g.AddEdge(prev, g.end(), sentence.id);
  return Canonicalize(g);
}

WordAlignmentGraph ContractGroup(
    const CompatibleGroup &group,
    const std::unordered_map<SentenceId, const Sentence *> &sentences) {
  std::vector<const Sentence *> members;
  std::unordered_map<SentenceId, std::uint32_t> offset;
  std::uint32_t total = 0;
  for (SentenceId id : group.members) {
    const Sentence *s = sentences.at(id);
    members.push_back(s);
    offset[id] = total;
    total += static_cast<std::uint32_t>(s->tokens.size());
  }

  DisjointSets sets(total);
  for (const auto &[key, alignment] : group.alignments.canonical()) {
    if (!offset.count(key.first) || !offset.count(key.second)) continue;
    for (const AlignedPair &p : alignment.pairs) {
      sets.Union(offset[key.first] + p.left, offset[key.second] + p.right);
    }
  }

  std::map<std::uint32_t, std::vector<Occurrence>> components;
  for (const Sentence *s : members) {
    for (const Token &t : s->tokens) {
      components[sets.Find(offset[s->id] + t.position)].push_back(
          {s->id, t.position});
    }
  }

  WordAlignmentGraph g;
  std::unordered_map<std::uint32_t, NodeId> node_of_root;
  for (auto &[root, occurrences] : components) {
    std::string label = SmallestNormal(occurrences, sentences);
    node_of_root[root] = g.AddWordNode(std::move(label), occurrences);
  }
  for (const Sentence *s : members) {
    NodeId prev = g.start();
    for (const Token &t : s->tokens) {
      NodeId id = node_of_root[sets.Find(offset[s->id] + t.position)];
      g.AddEdge(prev, id, s->id);
      prev = id;
    }
    g.AddEdge(prev, g.end(), s->id);
  }
  return Canonicalize(g);
}

WordAlignmentGraph AssembleGraph(std::span<const WordAlignmentGraph> groups) {
  WordAlignmentGraph out;
  for (const WordAlignmentGraph &g : groups) {
    std::vector<NodeId> mapped(g.nodes().size());
    for (const Node &n : g.nodes()) {
      switch (n.kind) {
        case NodeKind::kStart:
          mapped[n.id] = out.start();
          break;
        case NodeKind::kEnd:
          mapped[n.id] = out.end();
          break;
        case NodeKind::kWord:
          mapped[n.id] = out.AddWordNode(n.label, n.occurrences);
          break;
      }
    }
    for (const auto &[edge, support] : g.edges()) {
      out.AddEdge(mapped[edge.first], mapped[edge.second], support);
    }
  }
  return Canonicalize(out);
}

WordAlignmentGraph BuildGraph(const Document &doc,
                              std::span<const CompatibleGroup> groups) {
  auto sentences = IndexById(doc);
  std::vector<WordAlignmentGraph> parts;
  parts.reserve(groups.size());
  for (const CompatibleGroup &group : groups) {
    parts.push_back(ContractGroup(group, sentences));
  }
  return AssembleGraph(parts);
}

WordAlignmentGraph StripPunctuation(const WordAlignmentGraph &graph) {
  WordAlignmentGraph out;
  std::vector<NodeId> mapped(graph.nodes().size(), 0);
  std::vector<bool> kept(graph.nodes().size(), true);
  for (const Node &n : graph.nodes()) {
    if (n.kind == NodeKind::kStart) {
      mapped[n.id] = out.start();
    } else if (n.kind == NodeKind::kEnd) {
      mapped[n.id] = out.end();
    } else if (IsPunctuation(n.label)) {
      kept[n.id] = false;
    } else {
      mapped[n.id] = out.AddWordNode(n.label, n.occurrences);
    }
  }
  for (SentenceId sid : graph.SentenceIds()) {
    std::vector<NodeId> path = graph.SentencePath(sid);
    NodeId prev = out.start();
    for (std::size_t k = 1; k < path.size(); ++k) {
      if (!kept[path[k]]) continue;
      out.AddEdge(prev, mapped[path[k]], sid);
      prev = mapped[path[k]];
    }
  }
  return Canonicalize(out);
}

std::vector<std::string> ValidateGraph(const WordAlignmentGraph &graph) {
  std::vector<std::string> problems;
  const auto &nodes = graph.nodes();
  int starts = 0, ends = 0;
  for (const Node &n : nodes) {
    if (n.kind == NodeKind::kStart) ++starts;
    if (n.kind == NodeKind::kEnd) ++ends;
    if (n.kind == NodeKind::kWord && n.occurrences.empty()) {
      problems.push_back("word node " + std::to_string(n.id) +
                         " has no occurrences");
    }
    if (n.kind != NodeKind::kWord && !n.occurrences.empty()) {
      problems.push_back("terminal node " + std::to_string(n.id) +
                         " has occurrences");
    }
    for (std::size_t k = 1; k < n.occurrences.size(); ++k) {
      if (n.occurrences[k].sentence == n.occurrences[k - 1].sentence) {
        problems.push_back("node " + std::to_string(n.id) +
                           " holds two tokens of sentence " +
                           std::to_string(ToInt(n.occurrences[k].sentence)));
      }
    }
  }
  if (starts != 1 || ends != 1) {
    problems.push_back("expected exactly one START and one END node");
  }
  for (const auto &[edge, support] : graph.edges()) {
    if (support.empty()) {
      problems.push_back("edge " + std::to_string(edge.first) + "->" +
                         std::to_string(edge.second) + " has no support");
    }
    if (edge.second == graph.start()) problems.push_back("edge into START");
    if (edge.first == graph.end()) problems.push_back("edge out of END");
  }
  try {
    TopologicalOrder(graph);
  } catch (const Error &) {
    problems.push_back("graph has a cycle");
  }
  for (SentenceId sid : graph.SentenceIds()) {
    std::vector<NodeId> path = graph.SentencePath(sid);
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      const SupportSet *support = graph.EdgeSupport(path[k], path[k + 1]);
      if (support == nullptr || !support->count(sid)) {
        problems.push_back("sentence " + std::to_string(ToInt(sid)) +
                           " does not replay as a path");
        break;
      }
    }
  }
  return problems;
}

std::string GraphToJson(const WordAlignmentGraph &graph) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "wag-1";
  doc["start"] = graph.start();
  doc["end"] = graph.end();
  ordered_json nodes = ordered_json::array();
  for (NodeId id : TopologicalOrder(graph)) {
    const Node &n = graph.node(id);
    ordered_json occ = ordered_json::array();
    for (const Occurrence &o : n.occurrences) {
      occ.push_back({ToInt(o.sentence), o.position});
    }
    nodes.push_back({{"id", n.id},
                     {"label", n.label},
                     {"kind", NodeKindName(n.kind)},
                     {"occurrences", std::move(occ)}});
  }
  doc["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto &[edge, support] : graph.edges()) {
    ordered_json ids = ordered_json::array();
    for (SentenceId sid : support) ids.push_back(ToInt(sid));
    edges.push_back(
        {{"from", edge.first}, {"to", edge.second}, {"support", ids}});
  }
  doc["edges"] = std::move(edges);
  return doc.dump(2) + "\n";
}

std::string GraphToDot(const WordAlignmentGraph &graph, std::string_view name) {
  std::ostringstream out;
  out << "digraph \"" << DotEscape(name) << "\" {\n";
  out << "  rankdir=LR;\n";
  for (NodeId id : TopologicalOrder(graph)) {
    const Node &n = graph.node(id);
    out << "  n" << n.id << " [label=\"" << DotEscape(n.label) << "\"";
    if (n.kind != NodeKind::kWord) {
      out << ", shape=point, xlabel=\"" << n.label << "\"";
    }
    out << "];\n";
  }
  for (const auto &[edge, support] : graph.edges()) {
    out << "  n" << edge.first << " -> n" << edge.second
        << " [weight=" << support.size() << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::unordered_map<SentenceId, const Sentence *> IndexById(
    const Document &doc) {
  std::unordered_map<SentenceId, const Sentence *> out;
  for (const Sentence &s : doc.sentences) out[s.id] = &s;
  return out;
}

}  // namespace essentia
