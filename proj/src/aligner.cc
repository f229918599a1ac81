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

#include "essentia/aligner.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "essentia/error.h"

namespace essentia {
namespace {

constexpr int kContextRadius = 2;

std::set<std::string> ContextWindow(const Sentence &s, std::uint32_t center) {
  std::set<std::string> window;
  const int n = static_cast<int>(s.tokens.size());
  const int c = static_cast<int>(center);
  for (int k = std::max(0, c - kContextRadius);
       k <= std::min(n - 1, c + kContextRadius); ++k) {
    window.insert(s.tokens[k].normal);
  }
  return window;
}

double Jaccard(const std::set<std::string> &a, const std::set<std::string> &b) {
  std::size_t common = 0;
  for (const auto &w : a) common += b.count(w);
  const std::size_t uni = a.size() + b.size() - common;
  return uni == 0 ? 1.0 : static_cast<double>(common) / uni;
}

double Cosine(const std::vector<float> &a, const std::vector<float> &b) {
  if (a.size() != b.size() || a.empty()) return 0.0;
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += static_cast<double>(a[i]) * b[i];
    na += static_cast<double>(a[i]) * a[i];
    nb += static_cast<double>(b[i]) * b[i];
  }
  if (na == 0 || nb == 0) return 0.0;
  return dot / (std::sqrt(na) * std::sqrt(nb));
}

bool CrossMasked(const Token &a, const Token &b) {
  return a.mask != MaskTag::kNone && b.mask != MaskTag::kNone &&
         a.mask != b.mask;
}

struct Candidate {
  std::uint32_t i;
  std::uint32_t j;
  double score;
  double skew;
};

}  // namespace

Alignment Alignment::Swapped() const {
  Alignment out;
  out.left = right;
  out.right = left;
  out.pairs.reserve(pairs.size());
  for (const AlignedPair &p : pairs) {
    out.pairs.push_back({p.right, p.left, p.score});
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const AlignedPair &x, const AlignedPair &y) {
              return std::tie(x.left, x.right) < std::tie(y.left, y.right);
            });
  return out;
}

EmbeddingTable EmbeddingTable::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  EmbeddingTable table;
  std::string line;
  std::size_t dim = 0;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string word;
    if (!(ss >> word)) continue;
    std::vector<float> vec;
    float v;
    while (ss >> v) vec.push_back(v);
    if (vec.empty()) continue;
    if (dim == 0) dim = vec.size();
    if (vec.size() != dim) {
      throw Error(ErrorCode::kIoError,
                  "inconsistent vector dimension for '" + word + "'");
    }
    table.Add(AsciiLower(word), std::move(vec));
  }
  return table;
}

void EmbeddingTable::Add(std::string word, std::vector<float> vector) {
  vectors_[std::move(word)] = std::move(vector);
}

const std::vector<float> *EmbeddingTable::Find(const std::string &word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

SynonymLexicon SynonymLexicon::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  SynonymLexicon lexicon;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto tab = line.find('\t');
    if (tab == std::string::npos) continue;
    std::string a = AsciiLower(line.substr(0, tab));
    std::string b = AsciiLower(line.substr(tab + 1));
    if (!a.empty() && !b.empty()) lexicon.Add(a, b);
  }
  return lexicon;
}

void SynonymLexicon::Add(const std::string &a, const std::string &b) {
  pairs_.emplace(a, b);
  pairs_.emplace(b, a);
}

bool SynonymLexicon::Contains(const std::string &a,
                              const std::string &b) const {
  return pairs_.count({a, b}) > 0;
}

void AlignerConfig::Validate() const {
  const auto &w = weights;
  if (w.exact < 0 || w.embedding < 0 || w.context < 0) {
    throw Error(ErrorCode::kInvalidConfig, "aligner weights must be >= 0");
  }
  if (std::abs(w.exact + w.embedding + w.context - 1.0) > 1e-9) {
    throw Error(ErrorCode::kInvalidConfig, "aligner weights must sum to 1");
  }
  if (!(threshold >= 0.0 && threshold <= 1.0)) {
    throw Error(ErrorCode::kInvalidConfig, "threshold must lie in [0, 1]");
  }
}

double TokenSimilarity(const Sentence &ctx_a, std::uint32_t a,
                       const Sentence &ctx_b, std::uint32_t b,
                       const AlignerConfig &config) {
  const Token &ta = ctx_a.tokens.at(a);
  const Token &tb = ctx_b.tokens.at(b);
  if (CrossMasked(ta, tb)) return 0.0;

  const bool same =
      ta.normal == tb.normal ||
      (config.synonyms && config.synonyms->Contains(ta.normal, tb.normal));
  const double exact = same ? 1.0 : 0.0;

  double embedding = exact;
  if (config.embeddings) {
    const auto *va = config.embeddings->Find(ta.normal);
    const auto *vb = config.embeddings->Find(tb.normal);
    if (va && vb) embedding = std::max(0.0, Cosine(*va, *vb));
  }

  const double context =
      Jaccard(ContextWindow(ctx_a, a), ContextWindow(ctx_b, b));

  const auto &w = config.weights;
  const double score =
      w.exact * exact + w.embedding * embedding + w.context * context;
  return std::clamp(score, 0.0, 1.0);
}

Alignment AlignPair(const Sentence &s1, const Sentence &s2,
                    const AlignerConfig &config) {
  Alignment out;
  out.left = s1.id;
  out.right = s2.id;
  const auto n1 = static_cast<std::uint32_t>(s1.tokens.size());
  const auto n2 = static_cast<std::uint32_t>(s2.tokens.size());
  if (n1 == 0 || n2 == 0) return out;

  std::vector<Candidate> candidates;
  for (std::uint32_t i = 0; i < n1; ++i) {
    for (std::uint32_t j = 0; j < n2; ++j) {
      double score = TokenSimilarity(s1, i, s2, j, config);
      if (score < config.threshold) continue;
      double skew =
          std::abs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2);
      candidates.push_back({i, j, score, skew});
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate &x, const Candidate &y) {
              if (x.score != y.score) return x.score > y.score;
              if (x.skew != y.skew) return x.skew < y.skew;
              if (x.i != y.i) return x.i < y.i;
              return x.j < y.j;
            });

  std::vector<bool> left_used(n1, false);
  std::vector<bool> right_used(n2, false);
  for (const Candidate &c : candidates) {
    if (left_used[c.i] || right_used[c.j]) continue;
    if (config.enforce_monotone) {
      bool crosses = std::any_of(out.pairs.begin(), out.pairs.end(),
                                 [&](const AlignedPair &p) {
                                   return (p.left < c.i) != (p.right < c.j);
                                 });
      if (crosses) continue;
    }
    left_used[c.i] = right_used[c.j] = true;
    out.pairs.push_back({c.i, c.j, c.score});
  }
  std::sort(out.pairs.begin(), out.pairs.end(),
            [](const AlignedPair &x, const AlignedPair &y) {
              return std::tie(x.left, x.right) < std::tie(y.left, y.right);
            });
  return out;
}

void AlignmentSet::Insert(Alignment alignment) {
  if (alignment.right < alignment.left) alignment = alignment.Swapped();
  auto key = std::make_pair(alignment.left, alignment.right);
  backward_[{key.second, key.first}] = alignment.Swapped();
  forward_[key] = std::move(alignment);
}

const Alignment *AlignmentSet::Find(SentenceId a, SentenceId b) const {
  const auto &table = a < b ? forward_ : backward_;
  auto it = table.find({a, b});
  return it == table.end() ? nullptr : &it->second;
}

const Alignment &AlignmentSet::Get(SentenceId a, SentenceId b) const {
  const Alignment *found = Find(a, b);
  if (found == nullptr) {
    throw std::out_of_range("no alignment for sentences " +
                            std::to_string(ToInt(a)) + " and " +
                            std::to_string(ToInt(b)));
  }
  return *found;
}

AlignmentSet AlignAllPairs(const Document &doc, const AlignerConfig &config,
                           unsigned threads) {
  config.Validate();
  const auto &sentences = doc.sentences;
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t a = 0; a < sentences.size(); ++a) {
    for (std::size_t b = a + 1; b < sentences.size(); ++b) {
      if (sentences[b].id < sentences[a].id) {
        jobs.emplace_back(b, a);
      } else {
        jobs.emplace_back(a, b);
      }
    }
  }

  std::vector<Alignment> results(jobs.size());
  auto work = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t k = begin; k < jobs.size(); k += stride) {
      results[k] = AlignPair(sentences[jobs[k].first],
                             sentences[jobs[k].second], config);
    }
  };
  if (threads <= 1 || jobs.size() < 2) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto &th : pool) th.join();
  }

  AlignmentSet out;
  for (auto &a : results) out.Insert(std::move(a));
  return out;
}

}  // namespace essentia
