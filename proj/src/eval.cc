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

#include "essentia/eval.h"

#include <fstream>

#include "essentia/corpus.h"
#include "essentia/error.h"

namespace essentia {
namespace {

constexpr std::string_view kPpdbSeparator = " ||| ";

std::vector<std::string> SplitOn(std::string_view line,
                                 std::string_view separator) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t at = line.find(separator, start);
    if (at == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      return fields;
    }
    fields.emplace_back(line.substr(start, at - start));
    start = at + separator.size();
  }
}

std::string StemWord(std::string word) {
  auto strip = [&word](std::string_view suffix, std::size_t min_stem) {
    if (word.size() >= suffix.size() + min_stem &&
        word.compare(word.size() - suffix.size(), suffix.size(), suffix) == 0) {
      word.erase(word.size() - suffix.size());
      return true;
    }
    return false;
  };
  if (!strip("ing", 3) && !strip("ed", 3) && word.size() > 3 &&
      word.back() == 's' && word[word.size() - 2] != 's') {
    word.pop_back();
  }
  // reserve/reserved, stop/stopped.
  if (word.size() > 3 && word.back() == 'e') word.pop_back();
  const std::size_t n = word.size();
  if (n > 3 && word[n - 1] == word[n - 2] &&
      std::string_view("aeioulsz").find(word[n - 1]) ==
          std::string_view::npos) {
    word.pop_back();
  }
  return word;
}

}  // namespace

std::string NormalizePhrase(std::string_view phrase) {
  return JoinWords(SplitWords(AsciiLower(phrase)));
}

std::string StemPhrase(std::string_view normalized) {
  std::vector<std::string> words = SplitWords(normalized);
  for (std::string &w : words) w = StemWord(std::move(w));
  return JoinWords(words);
}

PhraseKey MakePhraseKey(std::string_view a, std::string_view b) {
  std::string x = NormalizePhrase(a);
  std::string y = NormalizePhrase(b);
  if (y < x) std::swap(x, y);
  return {std::move(x), std::move(y)};
}

PhraseKey MakePhraseKey(const ParaphrasePair &pair) {
  return MakePhraseKey(JoinWords(pair.phrase_a), JoinWords(pair.phrase_b));
}

ParaphraseDb ParaphraseDb::Parse(std::istream &in, std::string source_name) {
  ParaphraseDb db;
  db.source_name_ = std::move(source_name);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (NormalizePhrase(line).empty()) continue;
    std::string a, b;
    if (line.find(kPpdbSeparator) != std::string::npos) {
      auto fields = SplitOn(line, kPpdbSeparator);
      if (fields.size() >= 3) {
        a = fields[1];
        b = fields[2];
      }
    } else if (auto tab = line.find('\t'); tab != std::string::npos) {
      auto fields = SplitOn(line, "\t");
      a = fields[0];
      b = fields[1];
    }
    if (NormalizePhrase(a).empty() || NormalizePhrase(b).empty()) {
      ++db.skipped_;
      continue;
    }
    db.Add(a, b);
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
  if (db.entries_.empty()) {
    throw Error(ErrorCode::kEmptyDb, "no paraphrase entries parsed");
  }
  return db;
}

ParaphraseDb ParaphraseDb::Load(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return Parse(in, path.filename().string());
}

void ParaphraseDb::Add(std::string_view a, std::string_view b) {
  PhraseKey key = MakePhraseKey(a, b);
  PhraseKey stem = MakePhraseKey(StemPhrase(key.first), StemPhrase(key.second));
  entries_.insert(std::move(key));
  stemmed_.insert(std::move(stem));
}

bool ParaphraseDb::Contains(std::string_view a, std::string_view b,
                            bool stemmed) const {
  PhraseKey key = MakePhraseKey(a, b);
  if (!stemmed) return entries_.count(key) > 0;
  return stemmed_.count(
             MakePhraseKey(StemPhrase(key.first), StemPhrase(key.second))) > 0;
}

CoverageReport DbCoverage(const std::vector<ParaphrasePair> &pairs,
                          const ParaphraseDb &db, bool stemmed) {
  if (pairs.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no pairs to evaluate");
  }
  CoverageReport report;
  report.total = pairs.size();
  report.source_name = db.source_name();
  for (const ParaphrasePair &p : pairs) {
    if (db.Contains(JoinWords(p.phrase_a), JoinWords(p.phrase_b), stemmed)) {
      ++report.found;
    }
  }
  report.fraction =
      static_cast<double>(report.found) / static_cast<double>(report.total);
  return report;
}

LabeledPairs ParseLabels(std::istream &in) {
  LabeledPairs labels;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (NormalizePhrase(line).empty() || line.front() == '#') continue;
    auto fields = SplitOn(line, "\t");
    std::string flag = fields.size() == 3 ? NormalizePhrase(fields[2]) : "";
    if (flag != "0" && flag != "1") {
      throw Error(ErrorCode::kIoError,
                  "bad label line " + std::to_string(line_no));
    }
    labels[MakePhraseKey(fields[0], fields[1])] = flag == "1";
  }
  if (in.bad()) throw Error(ErrorCode::kIoError, "read failure");
  return labels;
}

LabeledPairs LoadLabels(const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  return ParseLabels(in);
}

PrecisionReport MakePrecisionReport(const std::vector<ParaphrasePair> &pairs,
                                    const LabeledPairs &labels) {
  PrecisionReport report;
  for (const ParaphrasePair &p : pairs) {
    auto it = labels.find(MakePhraseKey(p));
    if (it == labels.end()) {
      ++report.unjudged;
      continue;
    }
    ++report.extracted;
    if (it->second) ++report.valid;
  }
  if (report.extracted > 0) {
    report.precision = static_cast<double>(report.valid) /
                       static_cast<double>(report.extracted);
  }
  return report;
}

}  // namespace essentia
