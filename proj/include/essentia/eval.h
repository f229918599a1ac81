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

#ifndef ESSENTIA_EVAL_H_
#define ESSENTIA_EVAL_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "essentia/mine.h"

namespace essentia {

// Lowercased, whitespace-collapsed phrase text.
std::string NormalizePhrase(std::string_view phrase);

// Crude suffix stripping (-ing, -ed, -s, then a final -e or doubled
// consonant) applied per word, used by the optional stemmed lookup mode.
std::string StemPhrase(std::string_view normalized);

// Unordered, normalized phrase pair: first <= second.
using PhraseKey = std::pair<std::string, std::string>;
PhraseKey MakePhraseKey(std::string_view a, std::string_view b);
PhraseKey MakePhraseKey(const ParaphrasePair &pair);

class ParaphraseDb {
 public:
  // PPDB lines (" ||| " separated, phrase pair in fields 2 and 3) or
  // two-column TSV, detected per line. Malformed lines are skipped and
  // counted. Throws kEmptyDb when nothing parses.
  static ParaphraseDb Parse(std::istream &in, std::string source_name);
  // Throws kIoError when the file cannot be read.
  static ParaphraseDb Load(const std::filesystem::path &path);

  void Add(std::string_view a, std::string_view b);
  bool Contains(std::string_view a, std::string_view b,
                bool stemmed = false) const;

  std::size_t size() const { return entries_.size(); }
  std::size_t skipped_lines() const { return skipped_; }
  const std::string &source_name() const { return source_name_; }

 private:
  std::set<PhraseKey> entries_;
  std::set<PhraseKey> stemmed_;
  std::size_t skipped_ = 0;
  std::string source_name_;
};

struct CoverageReport {
  std::size_t total = 0;
  std::size_t found = 0;
  double fraction = 0.0;
  std::string source_name;
};

// Exact (or stemmed) lookup of every pair. Throws kEmptyInput on no pairs.
CoverageReport DbCoverage(const std::vector<ParaphrasePair> &pairs,
                          const ParaphraseDb &db, bool stemmed = false);

using LabeledPairs = std::map<PhraseKey, bool>;

// TSV `phrase_a<TAB>phrase_b<TAB>0|1`. Throws kIoError on unreadable input
// or a bad label column.
LabeledPairs ParseLabels(std::istream &in);
LabeledPairs LoadLabels(const std::filesystem::path &path);

struct PrecisionReport {
  std::size_t extracted = 0;  // judged pairs
  std::size_t valid = 0;
  std::size_t unjudged = 0;
  // valid / extracted; absent when nothing was judged.
  std::optional<double> precision;
};

PrecisionReport MakePrecisionReport(const std::vector<ParaphrasePair> &pairs,
                                    const LabeledPairs &labels);

}  // namespace essentia

#endif  // ESSENTIA_EVAL_H_
