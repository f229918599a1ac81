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

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "essentia/error.h"
#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "testing.h"

namespace essentia {
namespace {

using ::testing::ElementsAre;

std::vector<std::string> Normals(const Sentence &s) { return NormalForms(s); }

ErrorCode CodeOf(const std::function<void()> &fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

TEST(TokenizeTest, SplitsTrailingPeriod) {
  Sentence s =
      Tokenize("The world economy has fully recovered from the crisis.");
  EXPECT_THAT(Normals(s),
              ElementsAre("the", "world", "economy", "has", "fully",
                          "recovered", "from", "the", "crisis", "."));
  for (std::uint32_t k = 0; k < s.tokens.size(); ++k) {
    EXPECT_EQ(s.tokens[k].position, k);
    EXPECT_EQ(s.tokens[k].mask, MaskTag::kNone);
    EXPECT_EQ(s.tokens[k].pos, Pos::kUnknown);
  }
  EXPECT_EQ(s.tokens[0].surface, "The");
}

TEST(TokenizeTest, QuestionMarkBecomesToken) {
  Sentence s = Tokenize("Can we extend our reservation for two more days?");
  ASSERT_EQ(s.size(), 10u);
  EXPECT_EQ(s.tokens[8].normal, "days");
  EXPECT_EQ(s.tokens[9].normal, "?");
}

TEST(TokenizeTest, EmptyAndBlankInputFail) {
  EXPECT_EQ(CodeOf([] { Tokenize(""); }), ErrorCode::kEmptySentence);
  EXPECT_EQ(CodeOf([] { Tokenize(" \t  "); }), ErrorCode::kEmptySentence);
}

TEST(TokenizeTest, LeadingPunctuationAndInnerApostrophe) {
  Sentence s = Tokenize("(\"my parent's place\")");
  EXPECT_THAT(Normals(s),
              ElementsAre("(", "\"", "my", "parent's", "place", "\"", ")"));
  EXPECT_EQ(Detokenize(s), "(\"my parent's place\")");
}

TEST(TokenizeTest, DetokenizeNormalizesWhitespace) {
  Sentence s = Tokenize("  hello ,  world!!  ");
  EXPECT_THAT(Normals(s), ElementsAre("hello", ",", "world", "!", "!"));
  EXPECT_EQ(Detokenize(s), "hello , world!!");
}

TEST(TokenizeTest, ReconstructsRandomText) {
  std::mt19937 rng(7);
  const std::vector<std::string> pieces = {"a", "Bc", "x1",    "(",  ")", ".",
                                           "?", "'",  "don't", "\"", "-"};
  std::uniform_int_distribution<std::size_t> pick(0, pieces.size() - 1);
  std::uniform_int_distribution<int> len(1, 6), gap(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::string raw;
    std::vector<std::string> chunks;
    const int n = len(rng);
    for (int c = 0; c < n; ++c) {
      std::string chunk;
      const int parts = len(rng) % 3 + 1;
      for (int p = 0; p < parts; ++p) chunk += pieces[pick(rng)];
      chunks.push_back(chunk);
      raw +=
          std::string(gap(rng), ' ') + chunk + std::string(1 + gap(rng), ' ');
    }
    EXPECT_EQ(Detokenize(Tokenize(raw)), JoinWords(chunks)) << raw;
  }
}

TEST(MaskSpecialTest, EntitiesAfterSentenceStart) {
  Sentence s = MaskSpecial(Tokenize("directions to the Time Square"), {});
  EXPECT_THAT(Normals(s), ElementsAre("directions", "to", "the", "ORG", "ORG"));
  EXPECT_EQ(s.tokens[3].mask, MaskTag::kOrg);
  EXPECT_EQ(s.tokens[3].surface, "Time");
}

TEST(MaskSpecialTest, NumberWords) {
  Sentence s = MaskSpecial(Tokenize("for two more days"), {});
  EXPECT_THAT(Normals(s), ElementsAre("for", "NUM", "more", "days"));
  EXPECT_EQ(s.tokens[1].mask, MaskTag::kNum);
}

TEST(MaskSpecialTest, DigitsOrdinalsAndCompounds) {
  for (const char *number :
       {"3", "1,000", "3.5", "21st", "twenty-five", "Fifth", "dozen"}) {
    EXPECT_TRUE(IsNumberToken(number)) << number;
  }
  for (const char *word : {"5pm", "1.", "a1", "twenty-", "more"}) {
    EXPECT_FALSE(IsNumberToken(word)) << word;
  }
}

TEST(MaskSpecialTest, IdentityWithoutSpecials) {
  Sentence s = Tokenize("the world economy has fully recovered");
  EXPECT_EQ(MaskSpecial(s, {}), s);
}

TEST(MaskSpecialTest, SentenceInitialCapitalAndPronounKept) {
  Sentence s = MaskSpecial(Tokenize("\"Can I book a room in Rome?\""), {});
  EXPECT_THAT(Normals(s), ElementsAre("\"", "can", "i", "book", "a", "room",
                                      "in", "ORG", "?", "\""));
}

TEST(MaskSpecialTest, GazetteerMatchesCaseInsensitively) {
  MaskConfig config;
  config.gazetteer = {{"time", "square"}, {"uber"}};
  Sentence s = MaskSpecial(Tokenize("uber to time square now"), config);
  EXPECT_THAT(Normals(s), ElementsAre("ORG", "to", "ORG", "ORG", "now"));
}

TEST(MaskSpecialTest, IdempotentAndLengthPreserving) {
  std::mt19937 rng(11);
  const std::vector<std::string> words = {"The", "three", "Paris", "go",
                                          "42",  "book",  "Uber",  "."};
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  MaskConfig config;
  config.gazetteer = {{"go", "book"}};
  for (int trial = 0; trial < 200; ++trial) {
    std::string raw;
    for (int k = 0; k < 7; ++k) raw += words[pick(rng)] + " ";
    Sentence once = MaskSpecial(Tokenize(raw), config);
    EXPECT_EQ(MaskSpecial(once, config), once) << raw;
    EXPECT_EQ(once.size(), Tokenize(raw).size());
    for (const Token &t : once.tokens) {
      EXPECT_FALSE(t.normal.empty());
      if (t.mask == MaskTag::kNum) {
        EXPECT_EQ(t.normal, "NUM");
      }
      if (t.mask == MaskTag::kOrg) {
        EXPECT_EQ(t.normal, "ORG");
      }
    }
  }
}

TEST(LoadCorpusTest, EconomyFile) {
  std::stringstream in;
  for (const auto &line : testing::EconomyLines()) in << line << "\n";
  Document doc = LoadCorpus(in, "economy");
  ASSERT_EQ(doc.sentences.size(), 3u);
  EXPECT_EQ(doc.label, "economy");
  EXPECT_EQ(ToInt(doc.sentences[0].id), 1u);
  EXPECT_EQ(ToInt(doc.sentences[2].id), 3u);
  EXPECT_EQ(doc.sentences[2].raw, testing::EconomyLines()[2]);
}

TEST(LoadCorpusTest, OnlyCommentsIsEmptyDocument) {
  std::stringstream in("# one\n  # two\n\n");
  EXPECT_EQ(CodeOf([&] { LoadCorpus(in, "x"); }), ErrorCode::kEmptyDocument);
}

TEST(LoadCorpusTest, BlankLinesSkippedAndIdsFollowLines) {
  std::stringstream in("a b\nc d\n\ne f\ng h\ni j\n");
  Document doc = LoadCorpus(in, "x");
  ASSERT_EQ(doc.sentences.size(), 5u);
  EXPECT_EQ(ToInt(doc.sentences[2].id), 4u);
}

TEST(LoadCorpusTest, MissingFileIsIoError) {
  EXPECT_EQ(CodeOf([] { LoadCorpusFile("/nonexistent/corpus.txt", "x"); }),
            ErrorCode::kIoError);
}

TEST(LoadCorpusTest, TaggedFormat) {
  std::stringstream in(
      "shrugged\tVERB\tNONE\noff\tADP\tNONE\n\n"
      "Paris\tNOUN\tORG\n2\tOTHER\tNUM\n");
  Document doc = LoadTaggedCorpus(in, "t");
  ASSERT_EQ(doc.sentences.size(), 2u);
  EXPECT_EQ(doc.sentences[0].tokens[0].pos, Pos::kVerb);
  EXPECT_EQ(doc.sentences[0].raw, "shrugged off");
  EXPECT_THAT(Normals(doc.sentences[1]), ElementsAre("ORG", "NUM"));
  EXPECT_EQ(ToInt(doc.sentences[1].id), 2u);

  std::stringstream bad("word\tVERBISH\tNONE\n");
  EXPECT_EQ(CodeOf([&] { LoadTaggedCorpus(bad, "t"); }), ErrorCode::kIoError);
}

TEST(LoadCorpusTest, TaggedExtensionDispatch) {
  auto path = std::filesystem::temp_directory_path() / "essentia_corpus.tagged";
  {
    std::ofstream out(path);
    out << "get\tVERB\tNONE\nrid\tVERB\tNONE\n";
  }
  Document doc = LoadCorpusFile(path, "t");
  ASSERT_EQ(doc.sentences.size(), 1u);
  EXPECT_EQ(doc.sentences[0].tokens[1].pos, Pos::kVerb);
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace essentia
