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

#include "essentia/compat.h"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

#include "disjoint_sets.h"

namespace essentia {
namespace {

// Union-find over the tokens of a growing set of sentences. Token k of the
// i-th added sentence has index offset[i] + k.
class TokenClusters {
 public:
  void AddSentence(const Sentence &s) {
    index_[s.id] = members_.size();
    members_.push_back(&s);
    offsets_.push_back(static_cast<std::uint32_t>(sets_.size()));
    sets_.Grow(sets_.size() + s.tokens.size());
  }

  bool Contains(SentenceId id) const { return index_.count(id) > 0; }

  std::uint32_t TokenIndex(SentenceId id, std::uint32_t pos) const {
    return offsets_[index_.at(id)] + pos;
  }

  void Merge(const Alignment &a) {
    for (const AlignedPair &p : a.pairs) {
      sets_.Union(TokenIndex(a.left, p.left), TokenIndex(a.right, p.right));
    }
  }

  // Components holding two tokens of one sentence, then cycles among the
  // contracted nodes.
  std::vector<Violation> Violations() {
    std::vector<Violation> out;
    std::map<std::pair<std::uint32_t, SentenceId>, std::uint32_t> seen;
    for (const Sentence *s : members_) {
      for (std::uint32_t k = 0; k < s->tokens.size(); ++k) {
        auto key = std::make_pair(sets_.Find(TokenIndex(s->id, k)), s->id);
        auto [it, fresh] = seen.emplace(key, k);
        if (!fresh) {
          out.push_back(
              {ViolationKind::kContraction, {{s->id, it->second}, {s->id, k}}});
        }
      }
    }
    if (!out.empty()) return out;

    std::unordered_map<std::uint32_t, std::vector<std::uint32_t>> successors;
    std::unordered_map<std::uint32_t, int> indegree;
    for (const Sentence *s : members_) {
      for (std::uint32_t k = 0; k < s->tokens.size(); ++k) {
        std::uint32_t from = sets_.Find(TokenIndex(s->id, k));
        indegree.try_emplace(from, 0);
        if (k + 1 == s->tokens.size()) continue;
        std::uint32_t to = sets_.Find(TokenIndex(s->id, k + 1));
        successors[from].push_back(to);
        ++indegree[to];
      }
    }
    std::queue<std::uint32_t> ready;
    for (const auto &[node, deg] : indegree) {
      if (deg == 0) ready.push(node);
    }
    std::size_t visited = 0;
    while (!ready.empty()) {
      std::uint32_t node = ready.front();
      ready.pop();
      ++visited;
      for (std::uint32_t next : successors[node]) {
        if (--indegree[next] == 0) ready.push(next);
      }
    }
    if (visited == indegree.size()) return out;

    Violation cycle{ViolationKind::kContraction, {}};
    for (const Sentence *s : members_) {
      for (std::uint32_t k = 0; k < s->tokens.size(); ++k) {
        if (indegree[sets_.Find(TokenIndex(s->id, k))] > 0) {
          cycle.witnesses.push_back({s->id, k});
        }
      }
    }
    std::sort(cycle.witnesses.begin(), cycle.witnesses.end());
    out.push_back(std::move(cycle));
    return out;
  }

 private:
  std::vector<const Sentence *> members_;
  std::vector<std::uint32_t> offsets_;
  std::unordered_map<SentenceId, std::size_t> index_;
  DisjointSets sets_;
};

std::unordered_map<SentenceId, const Sentence *> IndexSentences(
    const Document &doc) {
  std::unordered_map<SentenceId, const Sentence *> out;
  for (const Sentence &s : doc.sentences) out[s.id] = &s;
  return out;
}

const AlignedPair *FindLeft(const Alignment &a, std::uint32_t left) {
  auto it = std::lower_bound(
      a.pairs.begin(), a.pairs.end(), left,
      [](const AlignedPair &p, std::uint32_t v) { return p.left < v; });
  return it != a.pairs.end() && it->left == left ? &*it : nullptr;
}

// Transitivity over the ordered triple (a, b, c).
void CheckTriple(SentenceId a, SentenceId b, SentenceId c,
                 const AlignmentSet &alignments, TransitivityPolicy policy,
                 std::vector<Violation> *out) {
  const Alignment &ab = alignments.Get(a, b);
  const Alignment &bc = alignments.Get(b, c);
  const Alignment &ac = alignments.Get(a, c);
  for (const AlignedPair &p : ab.pairs) {
    const AlignedPair *q = FindLeft(bc, p.right);
    if (q == nullptr) continue;
    const AlignedPair *direct = FindLeft(ac, p.left);
    if (direct != nullptr && direct->right == q->right) continue;
    if (direct == nullptr && policy == TransitivityPolicy::kLenient) continue;
    Violation v{ViolationKind::kTransitivity,
                {{a, p.left}, {b, p.right}, {c, q->right}}};
    if (direct != nullptr) v.witnesses.push_back({c, direct->right});
    out->push_back(std::move(v));
  }
}

class GroupBuilder {
 public:
  explicit GroupBuilder(const AlignmentSet *alignments)
      : alignments_(alignments) {}

  const std::vector<SentenceId> &members() const { return members_; }

  // Adds s when the enlarged group stays compatible.
  bool TryAdmit(const Sentence &s, const CompatConfig &config) {
    for (SentenceId m : members_) {
      const Alignment &a = alignments_->Get(m, s.id);
      if (!CheckInjectivity(a).empty() || !CheckMonotonicity(a).empty()) {
        return false;
      }
    }
    if (config.transitivity == TransitivityPolicy::kStrictClosure) {
      std::vector<Violation> found;
      for (SentenceId x : members_) {
        for (SentenceId y : members_) {
          if (x == y) continue;
          CheckTriple(s.id, x, y, *alignments_, config.transitivity, &found);
          CheckTriple(x, s.id, y, *alignments_, config.transitivity, &found);
          CheckTriple(x, y, s.id, *alignments_, config.transitivity, &found);
          if (!found.empty()) return false;
        }
      }
    }
    // Under the lenient policy a transitivity violation always surfaces as a
    // node holding two tokens of one sentence, so the contraction check
    // covers the remaining triples.
    TokenClusters trial = clusters_;
    trial.AddSentence(s);
    for (SentenceId m : members_) trial.Merge(alignments_->Get(m, s.id));
    if (!trial.Violations().empty()) return false;

    clusters_ = std::move(trial);
    members_.push_back(s.id);
    return true;
  }

 private:
  const AlignmentSet *alignments_;
  std::vector<SentenceId> members_;
  TokenClusters clusters_;
};

}  // namespace

std::string_view ViolationKindName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kInjectivity:
      return "INJECTIVITY";
    case ViolationKind::kMonotonicity:
      return "MONOTONICITY";
    case ViolationKind::kTransitivity:
      return "TRANSITIVITY";
    case ViolationKind::kContraction:
      return "CONTRACTION";
  }
  return "UNKNOWN";
}

std::vector<Violation> CheckInjectivity(const Alignment &alignment) {
  std::vector<Violation> out;
  std::map<std::uint32_t, int> left_count;
  std::map<std::uint32_t, int> right_count;
  for (const AlignedPair &p : alignment.pairs) {
    ++left_count[p.left];
    ++right_count[p.right];
  }
  for (const auto &[pos, n] : left_count) {
    if (n > 1) {
      out.push_back({ViolationKind::kInjectivity, {{alignment.left, pos}}});
    }
  }
  for (const auto &[pos, n] : right_count) {
    if (n > 1) {
      out.push_back({ViolationKind::kInjectivity, {{alignment.right, pos}}});
    }
  }
  return out;
}

std::vector<Violation> CheckMonotonicity(const Alignment &alignment) {
  std::vector<Violation> out;
  const auto &pairs = alignment.pairs;
  for (std::size_t x = 0; x < pairs.size(); ++x) {
    for (std::size_t y = x + 1; y < pairs.size(); ++y) {
      const AlignedPair &p = pairs[x];
      const AlignedPair &q = pairs[y];
      if (p.left == q.left || p.right == q.right) continue;
      if ((p.left < q.left) != (p.right < q.right)) {
        out.push_back({ViolationKind::kMonotonicity,
                       {{alignment.left, p.left},
                        {alignment.right, p.right},
                        {alignment.left, q.left},
                        {alignment.right, q.right}}});
      }
    }
  }
  return out;
}

std::vector<Violation> CheckTransitivity(std::span<const SentenceId> members,
                                         const AlignmentSet &alignments,
                                         TransitivityPolicy policy) {
  std::vector<Violation> out;
  for (SentenceId a : members) {
    for (SentenceId b : members) {
      if (b == a) continue;
      for (SentenceId c : members) {
        if (c == a || c == b) continue;
        CheckTriple(a, b, c, alignments, policy, &out);
      }
    }
  }
  return out;
}

std::vector<Violation> CheckContraction(std::span<const SentenceId> members,
                                        const AlignmentSet &alignments,
                                        const Document &doc) {
  auto by_id = IndexSentences(doc);
  TokenClusters clusters;
  for (SentenceId m : members) clusters.AddSentence(*by_id.at(m));
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      clusters.Merge(alignments.Get(members[x], members[y]));
    }
  }
  return clusters.Violations();
}

std::vector<Violation> CheckGroup(std::span<const SentenceId> members,
                                  const AlignmentSet &alignments,
                                  const Document &doc,
                                  const CompatConfig &config) {
  std::vector<Violation> out;
  for (std::size_t x = 0; x < members.size(); ++x) {
    for (std::size_t y = x + 1; y < members.size(); ++y) {
      const Alignment &a = alignments.Get(members[x], members[y]);
      auto inj = CheckInjectivity(a);
      auto mono = CheckMonotonicity(a);
      out.insert(out.end(), inj.begin(), inj.end());
      out.insert(out.end(), mono.begin(), mono.end());
    }
  }
  auto trans = CheckTransitivity(members, alignments, config.transitivity);
  out.insert(out.end(), trans.begin(), trans.end());
  auto contraction = CheckContraction(members, alignments, doc);
  out.insert(out.end(), contraction.begin(), contraction.end());
  return out;
}

std::vector<CompatibleGroup> PartitionIntoGroups(const Document &doc,
                                                 const AlignmentSet &alignments,
                                                 const CompatConfig &config) {
  std::vector<GroupBuilder> builders;
  for (const Sentence &s : doc.sentences) {
    bool placed = false;
    for (GroupBuilder &g : builders) {
      if (g.TryAdmit(s, config)) {
        placed = true;
        break;
      }
    }
    if (!placed) {
      builders.emplace_back(&alignments);
      builders.back().TryAdmit(s, config);
    }
  }

  std::vector<CompatibleGroup> groups;
  groups.reserve(builders.size());
  for (const GroupBuilder &g : builders) {
    CompatibleGroup group;
    group.members = g.members();
    for (std::size_t x = 0; x < group.members.size(); ++x) {
      for (std::size_t y = x + 1; y < group.members.size(); ++y) {
        group.alignments.Insert(
            alignments.Get(group.members[x], group.members[y]));
      }
    }
    groups.push_back(std::move(group));
  }
  return groups;
}

}  // namespace essentia
