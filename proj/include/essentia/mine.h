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

#ifndef ESSENTIA_MINE_H_
#define ESSENTIA_MINE_H_

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "essentia/corpus.h"
#include "essentia/graph.h"
#include "essentia/verb_lexicon.h"

namespace essentia {

enum class FilterMode {
  // Both phrases verb-initial and no longer than max_phrase_len.
  kVerb3,
  // Length rule only; every pair is annotated with its category.
  kAll,
};

struct MineConfig {
  std::size_t max_internal_len = 6;
  std::size_t max_phrase_len = 3;
  FilterMode filter = FilterMode::kVerb3;
  // Lets START/END-anchored (whole sentence) pairs through the length rule.
  bool keep_whole_sentence = false;
  // nullptr selects DefaultVerbLexicon().
  std::shared_ptr<const VerbLexicon> verbs;
};

// A path anchor_from -> internal... -> anchor_to taken by at least one input
// sentence. `support` holds the sentences that traverse it end to end.
struct PhrasePath {
  NodeId anchor_from = 0;
  NodeId anchor_to = 0;
  std::vector<NodeId> internal;
  std::vector<std::string> text;
  SupportSet support;

  bool operator==(const PhrasePath &) const = default;
};

struct CandidateSet {
  NodeId anchor_from = 0;
  NodeId anchor_to = 0;
  // At least two, pairwise internally disjoint, sorted by text.
  std::vector<PhrasePath> paths;
};

struct ParaphrasePair {
  std::vector<std::string> phrase_a;
  std::vector<std::string> phrase_b;
  std::string domain;
  NodeId anchor_from = 0;
  NodeId anchor_to = 0;
  SupportSet support;
  // "verb" or "other"; informational in FilterMode::kAll.
  std::string category;
};

struct OptionalPhrase {
  PhrasePath path;
  SupportSet bypass_support;
};

struct GeneratedSentence {
  std::vector<std::string> words;
  bool novel = false;
};

// Every attested path leaving `from` with 1..max_internal internal nodes,
// ordered by (anchor_to rank, text, internal ids).
std::vector<PhrasePath> AttestedPaths(const WordAlignmentGraph &graph,
                                      NodeId from, std::size_t max_internal);

// Parallel attested paths between anchor pairs. For every anchor pair the
// maximal families of pairwise internally-disjoint paths of size >= 2 are
// returned, ordered by anchor topological rank, then path text.
std::vector<CandidateSet> EnumerateParallelPaths(
    const WordAlignmentGraph &graph, const MineConfig &config = {});

// Expands candidate sets into unordered phrase pairs and applies the filter.
// POS tags of the first internal token come from the sentences when tagged,
// else from the verb lexicon. The result is deduplicated and sorted.
std::vector<ParaphrasePair> FilterCandidates(
    const std::vector<CandidateSet> &sets, const WordAlignmentGraph &graph,
    const std::unordered_map<SentenceId, const Sentence *> &sentences,
    const std::string &domain, const MineConfig &config = {});

// Attested paths that run parallel to a direct edge between their anchors.
std::vector<OptionalPhrase> DetectOptionalPhrases(
    const WordAlignmentGraph &graph, const MineConfig &config = {});

// START -> END paths in depth-first order (successors by topological rank),
// at most `limit`. A sequence is novel when it matches none of `inputs`.
std::vector<GeneratedSentence> GenerateSentences(
    const WordAlignmentGraph &graph, std::size_t limit,
    const std::vector<std::vector<std::string>> &inputs);

// The sentence's normal forms with optional runs removed greedily from the
// left, longest run first. Throws kSentenceNotInGraph.
std::vector<std::string> EssentialForm(
    const Sentence &sentence, const std::vector<OptionalPhrase> &optionals,
    const WordAlignmentGraph &graph);

}  // namespace essentia

#endif  // ESSENTIA_MINE_H_
