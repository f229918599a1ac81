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

#ifndef ESSENTIA_VERB_LEXICON_H_
#define ESSENTIA_VERB_LEXICON_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace essentia {

using VerbLexicon = std::unordered_set<std::string>;

// Built-in English verb forms: base, third person singular, past, past
// participle and present participle of common verbs, irregulars included.
const VerbLexicon &DefaultVerbLexicon();

// One lowercase form per line.
VerbLexicon LoadVerbLexicon(const std::filesystem::path &path);

// Regular inflections of a base form (base, -s, -ed, -ing).
std::unordered_set<std::string> RegularInflections(std::string_view base);

}  // namespace essentia

#endif  // ESSENTIA_VERB_LEXICON_H_
