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

#include "essentia/corpus.h"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "essentia/error.h"

namespace essentia {
namespace {

constexpr std::string_view kPunctuation = ".,?!;:'\"()";

bool IsPunctChar(char c) {
  return kPunctuation.find(c) != std::string_view::npos;
}

bool IsDigit(char c) { return c >= '0' && c <= '9'; }

const std::unordered_set<std::string> &NumberWords() {
  static const auto *words = new std::unordered_set<std::string>{
      "zero",       "one",        "two",        "three",     "four",
      "five",       "six",        "seven",      "eight",     "nine",
      "ten",        "eleven",     "twelve",     "thirteen",  "fourteen",
      "fifteen",    "sixteen",    "seventeen",  "eighteen",  "nineteen",
      "twenty",     "thirty",     "forty",      "fifty",     "sixty",
      "seventy",    "eighty",     "ninety",     "hundred",   "thousand",
      "million",    "billion",    "dozen",      "first",     "second",
      "third",      "fourth",     "fifth",      "sixth",     "seventh",
      "eighth",     "ninth",      "tenth",      "eleventh",  "twelfth",
      "thirteenth", "fourteenth", "fifteenth",  "sixteenth", "seventeenth",
      "eighteenth", "nineteenth", "twentieth",  "thirtieth", "fortieth",
      "fiftieth",   "sixtieth",   "seventieth", "eightieth", "ninetieth",
      "hundredth",  "thousandth", "millionth"};
  return *words;
}

bool IsDigitString(std::string_view s) {
  // 12, 3.5, 1,000, 10.000,5
  if (s.empty() || !IsDigit(s.front()) || !IsDigit(s.back())) return false;
  char prev = '0';
  for (char c : s) {
    if (IsDigit(c)) {
      prev = c;
      continue;
    }
    if ((c != '.' && c != ',') || !IsDigit(prev)) return false;
    prev = c;
  }
  return true;
}

bool IsDigitOrdinal(std::string_view s) {
  if (s.size() < 3) return false;
  std::string suffix = AsciiLower(s.substr(s.size() - 2));
  if (suffix != "st" && suffix != "nd" && suffix != "rd" && suffix != "th") {
    return false;
  }
  std::string_view digits = s.substr(0, s.size() - 2);
  return std::all_of(digits.begin(), digits.end(), IsDigit);
}

bool IsFirstPersonPronoun(std::string_view s) {
  return s == "I" || s == "I'm" || s == "I'd" || s == "I'll" || s == "I've";
}

void AppendToken(Sentence *sentence, std::string surface, bool attached) {
  Token token;
  token.normal = AsciiLower(surface);
  token.surface = std::move(surface);
  token.position = static_cast<std::uint32_t>(sentence->tokens.size());
  token.attached = attached && !sentence->tokens.empty();
  sentence->tokens.push_back(std::move(token));
}

Token MaskedCopy(const Token &token, MaskTag tag) {
  Token out = token;
  out.mask = tag;
  out.normal = std::string(tag == MaskTag::kNum ? kNumSymbol : kOrgSymbol);
  return out;
}

std::string StripCarriageReturn(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

bool IsBlank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

bool IsComment(std::string_view line) {
  auto first = line.find_first_not_of(" \t");
  return first != std::string_view::npos && line[first] == '#';
}

}  // namespace

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptySentence:
      return "EmptySentence";
    case ErrorCode::kEmptyDocument:
      return "EmptyDocument";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kCycleDetected:
      return "CycleDetected";
    case ErrorCode::kSentenceNotInGraph:
      return "SentenceNotInGraph";
    case ErrorCode::kEmptyDb:
      return "EmptyDb";
    case ErrorCode::kEmptyInput:
      return "EmptyInput";
  }
  return "Unknown";
}

std::string_view MaskTagName(MaskTag tag) {
  switch (tag) {
    case MaskTag::kNone:
      return "NONE";
    case MaskTag::kNum:
      return "NUM";
    case MaskTag::kOrg:
      return "ORG";
  }
  return "NONE";
}

std::string_view PosName(Pos pos) {
  switch (pos) {
    case Pos::kVerb:
      return "VERB";
    case Pos::kNoun:
      return "NOUN";
    case Pos::kAdp:
      return "ADP";
    case Pos::kDet:
      return "DET";
    case Pos::kOther:
      return "OTHER";
    case Pos::kUnknown:
      return "UNKNOWN";
  }
  return "UNKNOWN";
}

bool ParseMaskTag(std::string_view name, MaskTag *tag) {
  std::string upper(name);
  for (char &c : upper) c = static_cast<char>(std::toupper(c));
  for (MaskTag t : {MaskTag::kNone, MaskTag::kNum, MaskTag::kOrg}) {
    if (MaskTagName(t) == upper) {
      *tag = t;
      return true;
    }
  }
  return false;
}

bool ParsePos(std::string_view name, Pos *pos) {
  std::string upper(name);
  for (char &c : upper) c = static_cast<char>(std::toupper(c));
  for (Pos p : {Pos::kVerb, Pos::kNoun, Pos::kAdp, Pos::kDet, Pos::kOther,
                Pos::kUnknown}) {
    if (PosName(p) == upper) {
      *pos = p;
      return true;
    }
  }
  return false;
}

std::string AsciiLower(std::string_view text) {
  std::string out(text);
  for (char &c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::vector<std::string> SplitWords(std::string_view text) {
  std::vector<std::string> words;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
    std::size_t j = i;
    while (j < text.size() &&
           !std::isspace(static_cast<unsigned char>(text[j])))
      ++j;
    if (j > i) words.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return words;
}

std::string JoinWords(const std::vector<std::string> &words) {
  std::string out;
  for (const auto &w : words) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return out;
}

bool IsPunctuation(std::string_view surface) {
  return !surface.empty() &&
         std::all_of(surface.begin(), surface.end(), IsPunctChar);
}

bool IsNumberToken(std::string_view surface) {
  if (IsDigitString(surface) || IsDigitOrdinal(surface)) return true;
  std::string lower = AsciiLower(surface);
  const auto &words = NumberWords();
  if (words.count(lower)) return true;
  // Hyphenated compounds: twenty-five, thirty-first.
  auto dash = lower.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == lower.size()) {
    return false;
  }
  std::size_t start = 0;
  while (start <= lower.size()) {
    auto end = lower.find('-', start);
    if (end == std::string::npos) end = lower.size();
    if (!words.count(lower.substr(start, end - start))) return false;
    start = end + 1;
  }
  return true;
}

Sentence Tokenize(std::string_view raw, SentenceId id) {
  Sentence sentence;
  sentence.id = id;
  sentence.raw = std::string(raw);
  for (const std::string &chunk : SplitWords(raw)) {
    std::size_t begin = 0;
    std::size_t end = chunk.size();
    while (begin < end && IsPunctChar(chunk[begin])) ++begin;
    while (end > begin && IsPunctChar(chunk[end - 1])) --end;
    bool attached = false;
    for (std::size_t i = 0; i < begin; ++i) {
      AppendToken(&sentence, std::string(1, chunk[i]), attached);
      attached = true;
    }
    if (end > begin) {
      AppendToken(&sentence, chunk.substr(begin, end - begin), attached);
      attached = true;
    }
    for (std::size_t i = std::max(end, begin); i < chunk.size(); ++i) {
      AppendToken(&sentence, std::string(1, chunk[i]), attached);
      attached = true;
    }
  }
  if (sentence.tokens.empty()) {
    throw Error(ErrorCode::kEmptySentence, "empty sentence");
  }
  return sentence;
}

std::string Detokenize(const Sentence &sentence) {
  std::string out;
  for (const Token &token : sentence.tokens) {
    if (!out.empty() && !token.attached) out += ' ';
    out += token.surface;
  }
  return out;
}

Sentence MaskSpecial(const Sentence &sentence, const MaskConfig &config) {
  Sentence out = sentence;
  auto &tokens = out.tokens;

  if (config.mask_numbers) {
    for (Token &token : tokens) {
      if (token.mask == MaskTag::kNone && IsNumberToken(token.surface)) {
        token = MaskedCopy(token, MaskTag::kNum);
      }
    }
  }

  // Gazetteer entries, longest match first at each position.
  std::vector<bool> hit(tokens.size(), false);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    std::size_t best = 0;
    for (const auto &entry : config.gazetteer) {
      if (entry.empty() || entry.size() <= best ||
          i + entry.size() > tokens.size()) {
        continue;
      }
      bool match = true;
      for (std::size_t k = 0; k < entry.size() && match; ++k) {
        match = AsciiLower(tokens[i + k].surface) == AsciiLower(entry[k]);
      }
      if (match) best = entry.size();
    }
    for (std::size_t k = 0; k < best; ++k) hit[i + k] = true;
    if (best > 0) i += best - 1;
  }

  std::size_t first_word = 0;
  while (first_word < tokens.size() &&
         IsPunctuation(tokens[first_word].surface))
    ++first_word;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token &token = tokens[i];
    if (token.mask != MaskTag::kNone) continue;
    bool capitalized = config.mask_capitalized && i != first_word &&
                       token.surface[0] >= 'A' && token.surface[0] <= 'Z' &&
                       !IsFirstPersonPronoun(token.surface);
    if (hit[i] || capitalized) token = MaskedCopy(token, MaskTag::kOrg);
  }
  return out;
}

Document LoadCorpus(std::istream &source, std::string label,
                    const MaskConfig &config) {
  Document doc;
  doc.label = std::move(label);
  std::string line;
  std::uint32_t ordinal = 0;
  while (std::getline(source, line)) {
    ++ordinal;
    line = StripCarriageReturn(std::move(line));
    if (IsBlank(line) || IsComment(line)) continue;
    doc.sentences.push_back(
        MaskSpecial(Tokenize(line, SentenceId{ordinal}), config));
  }
  if (source.bad()) throw Error(ErrorCode::kIoError, "read failure");
  if (doc.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "empty document");
  }
  return doc;
}

Document LoadTaggedCorpus(std::istream &source, std::string label) {
  Document doc;
  doc.label = std::move(label);
  Sentence current;
  std::uint32_t block = 0;
  auto flush = [&]() {
    if (current.tokens.empty()) return;
    current.id = SentenceId{++block};
    std::vector<std::string> surfaces;
    for (const Token &t : current.tokens) surfaces.push_back(t.surface);
    current.raw = JoinWords(surfaces);
    doc.sentences.push_back(std::move(current));
    current = Sentence{};
  };
  std::string line;
  std::uint32_t line_no = 0;
  while (std::getline(source, line)) {
    ++line_no;
    line = StripCarriageReturn(std::move(line));
    if (IsComment(line)) continue;
    if (IsBlank(line)) {
      flush();
      continue;
    }
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.empty() || fields[0].empty()) {
      throw Error(ErrorCode::kIoError,
                  "malformed tagged line " + std::to_string(line_no));
    }
    Token token;
    token.surface = fields[0];
    token.position = static_cast<std::uint32_t>(current.tokens.size());
    if (fields.size() > 1 && !ParsePos(fields[1], &token.pos)) {
      throw Error(ErrorCode::kIoError,
                  "unknown POS tag on line " + std::to_string(line_no));
    }
    if (fields.size() > 2 && !ParseMaskTag(fields[2], &token.mask)) {
      throw Error(ErrorCode::kIoError,
                  "unknown mask tag on line " + std::to_string(line_no));
    }
    token.normal = token.mask == MaskTag::kNone
                       ? AsciiLower(token.surface)
                       : std::string(token.mask == MaskTag::kNum ? kNumSymbol
                                                                 : kOrgSymbol);
    current.tokens.push_back(std::move(token));
  }
  flush();
  if (source.bad()) throw Error(ErrorCode::kIoError, "read failure");
  if (doc.sentences.empty()) {
    throw Error(ErrorCode::kEmptyDocument, "empty document");
  }
  return doc;
}

Document LoadCorpusFile(const std::filesystem::path &path, std::string label,
                        const MaskConfig &config) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  }
  if (path.extension() == ".tagged") {
    return LoadTaggedCorpus(in, std::move(label));
  }
  return LoadCorpus(in, std::move(label), config);
}

std::vector<std::vector<std::string>> LoadGazetteer(
    const std::filesystem::path &path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  }
  std::vector<std::vector<std::string>> entries;
  std::string line;
  while (std::getline(in, line)) {
    line = StripCarriageReturn(std::move(line));
    if (IsBlank(line) || IsComment(line)) continue;
    entries.push_back(SplitWords(line));
  }
  return entries;
}

std::vector<std::string> NormalForms(const Sentence &sentence) {
  std::vector<std::string> out;
  out.reserve(sentence.tokens.size());
  for (const Token &t : sentence.tokens) out.push_back(t.normal);
  return out;
}

}  // namespace essentia
