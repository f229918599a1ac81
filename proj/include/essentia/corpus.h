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

#ifndef ESSENTIA_CORPUS_H_
#define ESSENTIA_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace essentia {

// Sentence identifiers are the 1-based line (or block) ordinal of the
// sentence in its source.
enum class SentenceId : std::uint32_t {};

inline std::uint32_t ToInt(SentenceId id) {
  return static_cast<std::uint32_t>(id);
}

enum class MaskTag { kNone, kNum, kOrg };
enum class Pos { kVerb, kNoun, kAdp, kDet, kOther, kUnknown };

std::string_view MaskTagName(MaskTag tag);
std::string_view PosName(Pos pos);
// Both parsers are case-insensitive and return false on unknown names.
bool ParseMaskTag(std::string_view name, MaskTag *tag);
bool ParsePos(std::string_view name, Pos *pos);

inline constexpr std::string_view kNumSymbol = "NUM";
inline constexpr std::string_view kOrgSymbol = "ORG";

struct Token {
  std::string surface;
  // Lowercased surface, or the mask symbol when masked. Never empty.
  std::string normal;
  MaskTag mask = MaskTag::kNone;
  Pos pos = Pos::kUnknown;
  std::uint32_t position = 0;
  // True when no whitespace separated this token from the previous one in
  // the raw text (split-off punctuation, or the word after a leading quote).
  bool attached = false;

  bool operator==(const Token &) const = default;
};

struct Sentence {
  SentenceId id{};
  std::vector<Token> tokens;
  std::string raw;

  std::size_t size() const { return tokens.size(); }
  bool operator==(const Sentence &) const = default;
};

struct Document {
  std::vector<Sentence> sentences;
  std::string label;
};

struct MaskConfig {
  bool mask_numbers = true;
  bool mask_capitalized = true;
  // Entity surface forms; multi-word entries match token sequences.
  // Matching is case-insensitive.
  std::vector<std::vector<std::string>> gazetteer;
};

// Splits on whitespace, then peels leading/trailing punctuation characters
// off each chunk as single-character tokens. Throws kEmptySentence when raw
// holds no tokens.
Sentence Tokenize(std::string_view raw, SentenceId id = SentenceId{1});

// Rebuilds the whitespace-normalized raw text from token surfaces.
std::string Detokenize(const Sentence &sentence);

bool IsNumberToken(std::string_view surface);
bool IsPunctuation(std::string_view surface);

// Replaces numbers with NUM and entities with ORG. Tokens already masked are
// left alone, which makes the operation idempotent.
Sentence MaskSpecial(const Sentence &sentence, const MaskConfig &config);

// Plain corpus: one sentence per line, '#' comments, blank lines skipped.
Document LoadCorpus(std::istream &source, std::string label,
                    const MaskConfig &config = {});

// Pre-tagged corpus: `surface<TAB>pos<TAB>mask` lines, blank line between
// sentences, '#' comments. Masks and POS tags are taken as given.
Document LoadTaggedCorpus(std::istream &source, std::string label);

// Dispatches on the `.tagged` extension. Throws kIoError when unreadable.
Document LoadCorpusFile(const std::filesystem::path &path, std::string label,
                        const MaskConfig &config = {});

// One entity per line; blank lines and '#' comments ignored.
std::vector<std::vector<std::string>> LoadGazetteer(
    const std::filesystem::path &path);

// Normal forms of a sentence, in order.
std::vector<std::string> NormalForms(const Sentence &sentence);

std::string JoinWords(const std::vector<std::string> &words);
std::vector<std::string> SplitWords(std::string_view text);
std::string AsciiLower(std::string_view text);

}  // namespace essentia

#endif  // ESSENTIA_CORPUS_H_
