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

// Command-line front end: mine, graph, clean, eval.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "essentia/pipeline.h"

namespace {

struct Flags {
  std::vector<std::string> inputs;
  std::string out_dir = ".";
  std::string label;
  double threshold = 0.60;
  std::string embeddings;
  std::string synonyms;
  std::string gazetteer;
  std::size_t max_internal_len = 6;
  std::size_t max_phrase_len = 3;
  std::string filter_mode = "verb3";
  std::vector<std::string> formats = {"json", "tsv", "dot"};
  bool strip_punct = false;
  bool no_monotone_align = false;
  bool strict_transitivity = false;
  bool keep_whole_sentence = false;
  std::string db;
  std::string labels;
  bool stemmed = false;
  unsigned threads = 1;
};

void AddCommonFlags(CLI::App *cmd, Flags *f) {
  cmd->add_option("-i,--input", f->inputs,
                  "Corpus file(s); .tagged for pre-tagged")
      ->required();
  cmd->add_option("-o,--out-dir", f->out_dir, "Output directory");
  cmd->add_option("--label", f->label, "Domain label (default: file stem)");
  cmd->add_option("--threshold", f->threshold, "Alignment score threshold")
      ->check(CLI::Range(0.0, 1.0));
  cmd->add_option("--embeddings", f->embeddings, "Word vectors (text format)");
  cmd->add_option("--synonyms", f->synonyms, "Synonym lexicon (TSV)");
  cmd->add_option("--gazetteer", f->gazetteer, "Entity list, one per line");
  cmd->add_flag(
      "--no-monotone-align", f->no_monotone_align,
      "Align freely; order violations are rejected at partition time");
  cmd->add_flag("--strict-transitivity", f->strict_transitivity,
                "Require direct alignments for every two-step chain");
  cmd->add_option("--max-internal-len", f->max_internal_len,
                  "Longest path (internal nodes) considered when mining")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-phrase-len", f->max_phrase_len,
                  "Longest phrase kept by the filter")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--filter-mode", f->filter_mode, "verb3 or all")
      ->check(CLI::IsMember({"verb3", "all"}));
  cmd->add_flag("--keep-whole-sentence", f->keep_whole_sentence,
                "Let START/END-anchored pairs through the length rule");
  cmd->add_option("--formats", f->formats, "Any of json, tsv, dot")
      ->delimiter(',')
      ->check(CLI::IsMember({"json", "tsv", "dot"}));
  cmd->add_flag("--strip-punct", f->strip_punct,
                "Drop punctuation nodes from exported graphs");
  cmd->add_option("--threads", f->threads, "Alignment worker threads");
}

essentia::RunConfig ToConfig(const Flags &f) {
  essentia::RunConfig c;
  for (const auto &in : f.inputs) c.inputs.emplace_back(in);
  c.out_dir = f.out_dir;
  c.label = f.label;
  c.aligner.threshold = f.threshold;
  c.aligner.enforce_monotone = !f.no_monotone_align;
  if (!f.embeddings.empty()) c.embeddings_path = f.embeddings;
  if (!f.synonyms.empty()) c.synonyms_path = f.synonyms;
  if (!f.gazetteer.empty()) c.gazetteer_path = f.gazetteer;
  if (f.strict_transitivity) {
    c.compat.transitivity = essentia::TransitivityPolicy::kStrictClosure;
  }
  c.mine.max_internal_len = f.max_internal_len;
  c.mine.max_phrase_len = f.max_phrase_len;
  c.mine.filter = f.filter_mode == "all" ? essentia::FilterMode::kAll
                                         : essentia::FilterMode::kVerb3;
  c.mine.keep_whole_sentence = f.keep_whole_sentence;
  std::set<std::string> formats(f.formats.begin(), f.formats.end());
  c.write_json = formats.count("json") > 0;
  c.write_tsv = formats.count("tsv") > 0;
  c.write_dot = formats.count("dot") > 0;
  c.strip_punct = f.strip_punct;
  if (!f.db.empty()) c.db_path = f.db;
  if (!f.labels.empty()) c.labels_path = f.labels;
  c.stemmed_lookup = f.stemmed;
  c.threads = f.threads;
  return c;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Mine domain-specific paraphrases from same-intent sentences"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App *mine = app.add_subcommand("mine", "Run the full pipeline");
  CLI::App *graph = app.add_subcommand("graph", "Build and export the graph");
  CLI::App *clean = app.add_subcommand("clean", "Strip optional phrases");
  CLI::App *eval = app.add_subcommand("eval", "Database coverage / precision");
  for (CLI::App *cmd : {mine, graph, clean, eval}) AddCommonFlags(cmd, &flags);
  eval->add_option("--db", flags.db, "Paraphrase DB (PPDB or TSV)")->required();
  eval->add_option("--labels", flags.labels, "Judgements TSV");
  eval->add_flag("--stemmed", flags.stemmed, "Stemmed lookup");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const essentia::RunConfig config = ToConfig(flags);
  if (*mine) return essentia::CmdMine(config, std::cerr);
  if (*graph) return essentia::CmdGraph(config, std::cerr);
  if (*clean) return essentia::CmdClean(config, std::cerr);
  return essentia::CmdEval(config, std::cerr);
}
