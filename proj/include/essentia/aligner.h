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

#ifndef ESSENTIA_ALIGNER_H_
#define ESSENTIA_ALIGNER_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "essentia/corpus.h"

namespace essentia {

struct AlignedPair {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  double score = 0.0;

  bool operator==(const AlignedPair &) const = default;
};

// Token-level alignment between two sentences. Pairs are kept sorted by
// (left, right).
struct Alignment {
  SentenceId left{};
  SentenceId right{};
  std::vector<AlignedPair> pairs;

  // Returns the alignment with the roles of left and right exchanged.
  Alignment Swapped() const;
  bool operator==(const Alignment &) const = default;
};

// GloVe-style text vectors: `word v1 v2 ... vd` per line.
class EmbeddingTable {
 public:
  static EmbeddingTable Load(const std::filesystem::path &path);

  void Add(std::string word, std::vector<float> vector);
  const std::vector<float> *Find(const std::string &word) const;
  std::size_t size() const { return vectors_.size(); }

 private:
  std::unordered_map<std::string, std::vector<float>> vectors_;
};

// Symmetric set of equivalent normal forms.
class SynonymLexicon {
 public:
  // Lines `word1<TAB>word2`.
  static SynonymLexicon Load(const std::filesystem::path &path);

  void Add(const std::string &a, const std::string &b);
  bool Contains(const std::string &a, const std::string &b) const;
  bool empty() const { return pairs_.empty(); }

 private:
  std::set<std::pair<std::string, std::string>> pairs_;
};

struct AlignerWeights {
  double exact = 0.55;
  double embedding = 0.30;
  double context = 0.15;
};

struct AlignerConfig {
  double threshold = 0.60;
  AlignerWeights weights;
  std::shared_ptr<const EmbeddingTable> embeddings;
  std::shared_ptr<const SynonymLexicon> synonyms;
  bool enforce_monotone = true;

  // Throws kInvalidConfig unless weights are nonnegative, sum to 1 within
  // 1e-9, and threshold lies in [0, 1].
  void Validate() const;
};

// Similarity of token a (inside ctx_a) to token b (inside ctx_b), in [0, 1].
double TokenSimilarity(const Sentence &ctx_a, std::uint32_t a,
                       const Sentence &ctx_b, std::uint32_t b,
                       const AlignerConfig &config);

// Greedy weighted matching: every token pair is scored, candidates above the
// threshold are visited best-first and accepted unless they break
// injectivity (or, when enabled, monotonicity) against earlier choices.
Alignment AlignPair(const Sentence &s1, const Sentence &s2,
                    const AlignerConfig &config);

// Alignments for all unordered sentence pairs of a document. Lookups with the
// ids in either order return the appropriately oriented alignment.
class AlignmentSet {
 public:
  void Insert(Alignment alignment);

  // Alignment oriented as (a, b). Returns nullptr when the pair is absent.
  // The oriented copy for (larger, smaller) is materialized on insert.
  const Alignment *Find(SentenceId a, SentenceId b) const;
  const Alignment &Get(SentenceId a, SentenceId b) const;

  // Number of unordered pairs stored.
  std::size_t size() const { return forward_.size(); }
  bool empty() const { return forward_.empty(); }

  // Canonical (smaller id on the left) alignments in key order.
  const std::map<std::pair<SentenceId, SentenceId>, Alignment> &canonical()
      const {
    return forward_;
  }

 private:
  std::map<std::pair<SentenceId, SentenceId>, Alignment> forward_;
  std::map<std::pair<SentenceId, SentenceId>, Alignment> backward_;
};

// n(n-1)/2 calls to AlignPair; the left sentence is always the one with the
// smaller id. `threads` > 1 evaluates pairs concurrently; the result is
// identical to the sequential one.
AlignmentSet AlignAllPairs(const Document &doc, const AlignerConfig &config,
                           unsigned threads = 1);

}  // namespace essentia

#endif  // ESSENTIA_ALIGNER_H_
