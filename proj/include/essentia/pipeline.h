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

#ifndef ESSENTIA_PIPELINE_H_
#define ESSENTIA_PIPELINE_H_

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "essentia/aligner.h"
#include "essentia/compat.h"
#include "essentia/corpus.h"
#include "essentia/graph.h"
#include "essentia/mine.h"

namespace essentia {

struct RunConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path out_dir = ".";
  // Domain label; defaults to the input file stem.
  std::string label;

  MaskConfig mask;
  AlignerConfig aligner;
  std::optional<std::filesystem::path> embeddings_path;
  std::optional<std::filesystem::path> synonyms_path;
  std::optional<std::filesystem::path> gazetteer_path;
  CompatConfig compat;
  MineConfig mine;

  bool write_json = true;
  bool write_tsv = true;
  bool write_dot = true;
  bool strip_punct = false;

  std::optional<std::filesystem::path> db_path;
  std::optional<std::filesystem::path> labels_path;
  bool stemmed_lookup = false;

  unsigned threads = 1;
};

struct PipelineResult {
  Document doc;
  AlignmentSet alignments;
  std::vector<CompatibleGroup> groups;
  WordAlignmentGraph graph;
  std::vector<CandidateSet> candidates;
  std::vector<ParaphrasePair> pairs;
  std::vector<OptionalPhrase> optionals;
};

// Align, partition, contract and mine one document.
PipelineResult RunPipeline(Document doc, const RunConfig &config);

// Loads the external resources named in `config` (embeddings, synonyms,
// gazetteer) and validates it. Throws kIoError / kInvalidConfig.
RunConfig ResolveResources(RunConfig config);

Document LoadInput(const std::filesystem::path &path, const RunConfig &config);

// Output formats.
std::string PairToJsonLine(const ParaphrasePair &pair);
std::string OptionalToJsonLine(const OptionalPhrase &optional,
                               const WordAlignmentGraph &graph);
std::string GroupsToJson(const std::vector<CompatibleGroup> &groups);
std::vector<ParaphrasePair> ReadPairsJsonl(const std::filesystem::path &path);

// Subcommands. Exit status: 0 success, 1 user or input error, 2 internal
// invariant breach. Diagnostics go to `err`.
int CmdMine(const RunConfig &config, std::ostream &err);
int CmdGraph(const RunConfig &config, std::ostream &err);
int CmdClean(const RunConfig &config, std::ostream &err);
int CmdEval(const RunConfig &config, std::ostream &err);

}  // namespace essentia

#endif  // ESSENTIA_PIPELINE_H_
