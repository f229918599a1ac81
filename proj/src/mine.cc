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

#include "essentia/mine.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "essentia/error.h"

namespace essentia {
namespace {

std::vector<std::uint32_t> Ranks(const WordAlignmentGraph &graph) {
  std::vector<NodeId> order = TopologicalOrder(graph);
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t r = 0; r < order.size(); ++r) rank[order[r]] = r;
  return rank;
}

SupportSet Intersect(const SupportSet &a, const SupportSet &b) {
  SupportSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.end()));
  return out;
}

bool InternallyDisjoint(const PhrasePath &a, const PhrasePath &b) {
  for (NodeId x : a.internal) {
    if (std::find(b.internal.begin(), b.internal.end(), x) !=
        b.internal.end()) {
      return false;
    }
  }
  return true;
}

bool PathLess(const PhrasePath &a, const PhrasePath &b) {
  return std::tie(a.text, a.internal) < std::tie(b.text, b.internal);
}

// Bron-Kerbosch with pivoting over the "internally disjoint" relation.
void MaximalCliques(const std::vector<std::vector<bool>> &adjacent,
                    std::vector<int> &clique, std::vector<int> candidates,
                    std::vector<int> excluded,
                    std::vector<std::vector<int>> *out) {
  if (candidates.empty() && excluded.empty()) {
    out->push_back(clique);
    return;
  }
  int pivot = -1;
  std::size_t best = 0;
  for (const auto *pool : {&candidates, &excluded}) {
    for (int u : *pool) {
      std::size_t n = 0;
      for (int v : candidates) n += adjacent[u][v];
      if (pivot < 0 || n > best) {
        pivot = u;
        best = n;
      }
    }
  }
  std::vector<int> branch;
  for (int v : candidates) {
    if (!adjacent[pivot][v]) branch.push_back(v);
  }
  for (int v : branch) {
    std::vector<int> next_candidates, next_excluded;
    for (int w : candidates) {
      if (adjacent[v][w]) next_candidates.push_back(w);
    }
    for (int w : excluded) {
      if (adjacent[v][w]) next_excluded.push_back(w);
    }
    clique.push_back(v);
    MaximalCliques(adjacent, clique, std::move(next_candidates),
                   std::move(next_excluded), out);
    clique.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

std::vector<CandidateSet> DisjointFamilies(std::vector<PhrasePath> paths) {
  const int n = static_cast<int>(paths.size());
  std::vector<std::vector<bool>> adjacent(n, std::vector<bool>(n, false));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      adjacent[a][b] = adjacent[b][a] = InternallyDisjoint(paths[a], paths[b]);
    }
  }
  std::vector<int> all(n);
  for (int k = 0; k < n; ++k) all[k] = k;
  std::vector<std::vector<int>> cliques;
  std::vector<int> clique;
  MaximalCliques(adjacent, clique, all, {}, &cliques);

  std::vector<CandidateSet> out;
  for (auto &members : cliques) {
    if (members.size() < 2) continue;
    CandidateSet set;
    set.anchor_from = paths[members.front()].anchor_from;
    set.anchor_to = paths[members.front()].anchor_to;
    for (int k : members) set.paths.push_back(paths[k]);
    std::sort(set.paths.begin(), set.paths.end(), PathLess);
    out.push_back(std::move(set));
  }
  std::sort(
      out.begin(), out.end(), [](const CandidateSet &x, const CandidateSet &y) {
        return std::lexicographical_compare(x.paths.begin(), x.paths.end(),
                                            y.paths.begin(), y.paths.end(),
                                            PathLess);
      });
  return out;
}

bool IsVerbInitial(
    const PhrasePath &path, const WordAlignmentGraph &graph,
    const std::unordered_map<SentenceId, const Sentence *> &sentences,
    const VerbLexicon &verbs) {
  const Node &head = graph.node(path.internal.front());
  std::optional<Pos> tagged;
  bool masked = false;
  // Tags from sentences that take this path win over other occurrences.
  for (int pass = 0; pass < 2 && !tagged; ++pass) {
    for (const Occurrence &o : head.occurrences) {
      if ((pass == 0) != (path.support.count(o.sentence) > 0)) continue;
      auto it = sentences.find(o.sentence);
      if (it == sentences.end()) continue;
      const Token &t = it->second->tokens.at(o.position);
      masked = masked || t.mask != MaskTag::kNone;
      if (t.pos != Pos::kUnknown) {
        tagged = t.pos;
        break;
      }
    }
  }
  if (tagged) return *tagged == Pos::kVerb;
  if (masked) return false;
  return verbs.count(head.label) > 0;
}

}  // namespace

std::vector<PhrasePath> AttestedPaths(const WordAlignmentGraph &graph,
                                      NodeId from, std::size_t max_internal) {
  std::vector<PhrasePath> out;
  if (max_internal == 0) return out;
  PhrasePath current;
  current.anchor_from = from;

  std::function<void(NodeId, const SupportSet &)> extend =
      [&](NodeId at, const SupportSet &support) {
        for (NodeId next : graph.Successors(at)) {
          SupportSet reach = Intersect(support, *graph.EdgeSupport(at, next));
          if (reach.empty()) continue;
          PhrasePath found = current;
          found.anchor_to = next;
          found.support = reach;
          out.push_back(std::move(found));
          if (graph.node(next).kind != NodeKind::kWord ||
              current.internal.size() >= max_internal) {
            continue;
          }
          current.internal.push_back(next);
          current.text.push_back(graph.node(next).label);
          extend(next, reach);
          current.internal.pop_back();
          current.text.pop_back();
        }
      };

  for (NodeId first : graph.Successors(from)) {
    if (graph.node(first).kind != NodeKind::kWord) continue;
    current.internal = {first};
    current.text = {graph.node(first).label};
    extend(first, *graph.EdgeSupport(from, first));
  }

  const std::vector<std::uint32_t> rank = Ranks(graph);
  std::sort(out.begin(), out.end(),
            [&](const PhrasePath &a, const PhrasePath &b) {
              if (a.anchor_to != b.anchor_to) {
                return rank[a.anchor_to] < rank[b.anchor_to];
              }
              return PathLess(a, b);
            });
  return out;
}

std::vector<CandidateSet> EnumerateParallelPaths(
    const WordAlignmentGraph &graph, const MineConfig &config) {
  std::vector<CandidateSet> out;
  for (NodeId u : TopologicalOrder(graph)) {
    if (graph.OutDegree(u) < 2) continue;
    std::vector<PhrasePath> paths =
        AttestedPaths(graph, u, config.max_internal_len);
    // Paths arrive grouped by anchor_to.
    for (std::size_t lo = 0; lo < paths.size();) {
      std::size_t hi = lo;
      while (hi < paths.size() && paths[hi].anchor_to == paths[lo].anchor_to)
        ++hi;
      if (hi - lo >= 2) {
        auto sets =
            DisjointFamilies({paths.begin() + static_cast<std::ptrdiff_t>(lo),
                              paths.begin() + static_cast<std::ptrdiff_t>(hi)});
        out.insert(out.end(), std::make_move_iterator(sets.begin()),
                   std::make_move_iterator(sets.end()));
      }
      lo = hi;
    }
  }
  return out;
}

std::vector<ParaphrasePair> FilterCandidates(
    const std::vector<CandidateSet> &sets, const WordAlignmentGraph &graph,
    const std::unordered_map<SentenceId, const Sentence *> &sentences,
    const std::string &domain, const MineConfig &config) {
  const VerbLexicon &verbs =
      config.verbs ? *config.verbs : DefaultVerbLexicon();
  std::map<std::pair<std::vector<std::string>, std::vector<std::string>>,
           ParaphrasePair>
      kept;
  for (const CandidateSet &set : sets) {
    const bool whole =
        set.anchor_from == graph.start() && set.anchor_to == graph.end();
    for (std::size_t x = 0; x < set.paths.size(); ++x) {
      for (std::size_t y = x + 1; y < set.paths.size(); ++y) {
        const PhrasePath *a = &set.paths[x];
        const PhrasePath *b = &set.paths[y];
        if (a->text == b->text) continue;
        const bool short_enough = a->text.size() <= config.max_phrase_len &&
                                  b->text.size() <= config.max_phrase_len;
        if (!short_enough && !(whole && config.keep_whole_sentence)) continue;
        const bool verb_pair = IsVerbInitial(*a, graph, sentences, verbs) &&
                               IsVerbInitial(*b, graph, sentences, verbs);
        if (config.filter == FilterMode::kVerb3 && !verb_pair) continue;
        if (b->text < a->text) std::swap(a, b);
        auto key = std::make_pair(a->text, b->text);
        if (kept.count(key)) continue;
        ParaphrasePair pair;
        pair.phrase_a = a->text;
        pair.phrase_b = b->text;
        pair.domain = domain;
        pair.anchor_from = set.anchor_from;
        pair.anchor_to = set.anchor_to;
        pair.support = a->support;
        pair.support.insert(b->support.begin(), b->support.end());
        pair.category = verb_pair ? "verb" : "other";
        kept.emplace(std::move(key), std::move(pair));
      }
    }
  }
  std::vector<ParaphrasePair> out;
  out.reserve(kept.size());
  for (auto &[key, pair] : kept) out.push_back(std::move(pair));
  return out;
}

std::vector<OptionalPhrase> DetectOptionalPhrases(
    const WordAlignmentGraph &graph, const MineConfig &config) {
  std::vector<OptionalPhrase> out;
  for (NodeId u : TopologicalOrder(graph)) {
    if (graph.OutDegree(u) < 2) continue;
    for (PhrasePath &path : AttestedPaths(graph, u, config.max_internal_len)) {
      const SupportSet *bypass = graph.EdgeSupport(u, path.anchor_to);
      if (bypass == nullptr) continue;
      out.push_back({std::move(path), *bypass});
    }
  }
  return out;
}

std::vector<GeneratedSentence> GenerateSentences(
    const WordAlignmentGraph &graph, std::size_t limit,
    const std::vector<std::vector<std::string>> &inputs) {
  std::vector<GeneratedSentence> out;
  if (limit == 0) return out;
  const std::set<std::vector<std::string>> known(inputs.begin(), inputs.end());
  const std::vector<std::uint32_t> rank = Ranks(graph);
  std::vector<std::string> words;

  std::function<void(NodeId)> walk = [&](NodeId at) {
    if (out.size() >= limit) return;
    if (at == graph.end()) {
      out.push_back({words, known.count(words) == 0});
      return;
    }
    std::vector<NodeId> next = graph.Successors(at);
    std::sort(next.begin(), next.end(),
              [&](NodeId a, NodeId b) { return rank[a] < rank[b]; });
    for (NodeId n : next) {
      const bool word = graph.node(n).kind == NodeKind::kWord;
      if (word) words.push_back(graph.node(n).label);
      walk(n);
      if (word) words.pop_back();
      if (out.size() >= limit) return;
    }
  };
  walk(graph.start());
  return out;
}

std::vector<std::string> EssentialForm(
    const Sentence &sentence, const std::vector<OptionalPhrase> &optionals,
    const WordAlignmentGraph &graph) {
  const std::vector<NodeId> path = graph.SentencePath(sentence.id);
  if (path.size() != sentence.tokens.size() + 2) {
    throw Error(ErrorCode::kSentenceNotInGraph,
                "sentence " + std::to_string(ToInt(sentence.id)) +
                    " is not in the graph");
  }
  std::multimap<NodeId, const OptionalPhrase *> by_anchor;
  for (const OptionalPhrase &o : optionals) {
    by_anchor.emplace(o.path.anchor_from, &o);
  }

  std::vector<std::string> out;
  // Token p sits at path[p + 1].
  for (std::size_t p = 0; p < sentence.tokens.size();) {
    std::size_t best = 0;
    auto [lo, hi] = by_anchor.equal_range(path[p]);
    for (auto it = lo; it != hi; ++it) {
      const PhrasePath &o = it->second->path;
      const std::size_t len = o.internal.size();
      if (len <= best || p + len > sentence.tokens.size()) continue;
      if (path[p + len + 1] != o.anchor_to) continue;
      if (!graph.HasEdge(o.anchor_from, o.anchor_to)) continue;
      if (std::equal(o.internal.begin(), o.internal.end(),
                     path.begin() + static_cast<std::ptrdiff_t>(p + 1))) {
        best = len;
      }
    }
    if (best > 0) {
      p += best;
    } else {
      out.push_back(sentence.tokens[p].normal);
      ++p;
    }
  }
  return out;
}

}  // namespace essentia
