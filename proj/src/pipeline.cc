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

#include "essentia/pipeline.h"

#include <chrono>
#include <fstream>

#include "essentia/error.h"
#include "essentia/eval.h"
#include "json.hpp"

namespace essentia {
namespace {

namespace fs = std::filesystem;
using nlohmann::ordered_json;

void WriteFile(const fs::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
}

ordered_json Ids(const SupportSet &ids) {
  ordered_json out = ordered_json::array();
  for (SentenceId id : ids) out.push_back(ToInt(id));
  return out;
}

std::string LabelFor(const fs::path &input, const RunConfig &config) {
  return config.label.empty() ? input.stem().string() : config.label;
}

fs::path OutDirFor(const fs::path &input, const RunConfig &config) {
  fs::path dir = config.out_dir;
  if (config.inputs.size() > 1) dir /= input.stem();
  fs::create_directories(dir);
  return dir;
}

ordered_json ConfigEcho(const RunConfig &config) {
  ordered_json c;
  ordered_json inputs = ordered_json::array();
  for (const auto &p : config.inputs) inputs.push_back(p.string());
  c["inputs"] = inputs;
  c["threshold"] = config.aligner.threshold;
  c["weights"] = {{"exact", config.aligner.weights.exact},
                  {"embedding", config.aligner.weights.embedding},
                  {"context", config.aligner.weights.context}};
  c["embeddings"] =
      config.embeddings_path ? config.embeddings_path->string() : "";
  c["synonyms"] = config.synonyms_path ? config.synonyms_path->string() : "";
  c["gazetteer"] = config.gazetteer_path ? config.gazetteer_path->string() : "";
  c["monotone_align"] = config.aligner.enforce_monotone;
  c["strict_transitivity"] =
      config.compat.transitivity == TransitivityPolicy::kStrictClosure;
  c["max_internal_len"] = config.mine.max_internal_len;
  c["max_phrase_len"] = config.mine.max_phrase_len;
  c["filter_mode"] = config.mine.filter == FilterMode::kVerb3 ? "verb3" : "all";
  c["strip_punct"] = config.strip_punct;
  return c;
}

// Maps library errors onto the exit-code contract.
template <typename Fn>
int Guarded(std::ostream &err, Fn &&fn) {
  try {
    fn();
    return 0;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kCycleDetected ? 2 : 1;
  } catch (const fs::filesystem_error &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

std::string ExportedGraphJson(const PipelineResult &r,
                              const RunConfig &config) {
  return GraphToJson(config.strip_punct ? StripPunctuation(r.graph) : r.graph);
}

std::string ExportedGraphDot(const PipelineResult &r, const RunConfig &config) {
  return GraphToDot(config.strip_punct ? StripPunctuation(r.graph) : r.graph,
                    r.doc.label);
}

}  // namespace

RunConfig ResolveResources(RunConfig config) {
  config.aligner.Validate();
  if (config.mine.max_internal_len < 1) {
    throw Error(ErrorCode::kInvalidConfig, "max-internal-len must be >= 1");
  }
  if (config.mine.max_phrase_len < 1) {
    throw Error(ErrorCode::kInvalidConfig, "max-phrase-len must be >= 1");
  }
  for (const auto &input : config.inputs) {
    if (!fs::exists(input)) {
      throw Error(ErrorCode::kIoError, "no such file: " + input.string());
    }
  }
  if (config.embeddings_path) {
    config.aligner.embeddings = std::make_shared<const EmbeddingTable>(
        EmbeddingTable::Load(*config.embeddings_path));
  }
  if (config.synonyms_path) {
    config.aligner.synonyms = std::make_shared<const SynonymLexicon>(
        SynonymLexicon::Load(*config.synonyms_path));
  }
  if (config.gazetteer_path) {
    config.mask.gazetteer = LoadGazetteer(*config.gazetteer_path);
  }
  return config;
}

Document LoadInput(const fs::path &path, const RunConfig &config) {
  return LoadCorpusFile(path, LabelFor(path, config), config.mask);
}

PipelineResult RunPipeline(Document doc, const RunConfig &config) {
  PipelineResult r;
  r.doc = std::move(doc);
  r.alignments = AlignAllPairs(r.doc, config.aligner, config.threads);
  r.groups = PartitionIntoGroups(r.doc, r.alignments, config.compat);
  r.graph = BuildGraph(r.doc, r.groups);
  r.candidates = EnumerateParallelPaths(r.graph, config.mine);
  r.pairs = FilterCandidates(r.candidates, r.graph, IndexById(r.doc),
                             r.doc.label, config.mine);
  r.optionals = DetectOptionalPhrases(r.graph, config.mine);
  return r;
}

std::string PairToJsonLine(const ParaphrasePair &pair) {
  ordered_json j;
  j["phrase_a"] = JoinWords(pair.phrase_a);
  j["phrase_b"] = JoinWords(pair.phrase_b);
  j["domain"] = pair.domain;
  j["anchors"] = {pair.anchor_from, pair.anchor_to};
  j["support"] = Ids(pair.support);
  j["category"] = pair.category;
  return j.dump() + "\n";
}

std::string OptionalToJsonLine(const OptionalPhrase &optional,
                               const WordAlignmentGraph &graph) {
  const PhrasePath &p = optional.path;
  ordered_json j;
  j["phrase"] = JoinWords(p.text);
  j["anchors"] = {p.anchor_from, p.anchor_to};
  j["anchor_labels"] = {graph.node(p.anchor_from).label,
                        graph.node(p.anchor_to).label};
  j["internal"] = p.internal;
  j["support"] = Ids(p.support);
  j["bypass_support"] = Ids(optional.bypass_support);
  return j.dump() + "\n";
}

std::string GroupsToJson(const std::vector<CompatibleGroup> &groups) {
  ordered_json out;
  ordered_json list = ordered_json::array();
  for (std::size_t k = 0; k < groups.size(); ++k) {
    ordered_json members = ordered_json::array();
    for (SentenceId id : groups[k].members) members.push_back(ToInt(id));
    list.push_back({{"group", k}, {"members", members}});
  }
  out["groups"] = list;
  return out.dump(2) + "\n";
}

std::vector<ParaphrasePair> ReadPairsJsonl(const fs::path &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path.string());
  std::vector<ParaphrasePair> pairs;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (NormalizePhrase(line).empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.contains("phrase_a") ||
        !j.contains("phrase_b") || !j["phrase_a"].is_string() ||
        !j["phrase_b"].is_string()) {
      throw Error(ErrorCode::kIoError, path.string() + ": bad pair on line " +
                                           std::to_string(line_no));
    }
    ParaphrasePair p;
    p.phrase_a = SplitWords(j["phrase_a"].get<std::string>());
    p.phrase_b = SplitWords(j["phrase_b"].get<std::string>());
    if (j.contains("domain") && j["domain"].is_string()) {
      p.domain = j["domain"].get<std::string>();
    }
    pairs.push_back(std::move(p));
  }
  return pairs;
}

int CmdMine(const RunConfig &raw, std::ostream &err) {
  return Guarded(err, [&] {
    const RunConfig config = ResolveResources(raw);
    for (const fs::path &input : config.inputs) {
      const auto started = std::chrono::steady_clock::now();
      PipelineResult r = RunPipeline(LoadInput(input, config), config);
      const fs::path dir = OutDirFor(input, config);

      std::string pairs_jsonl, pairs_tsv, optionals_jsonl;
      for (const ParaphrasePair &p : r.pairs) {
        pairs_jsonl += PairToJsonLine(p);
        pairs_tsv += JoinWords(p.phrase_a) + "\t" + JoinWords(p.phrase_b) +
                     "\t" + p.domain + "\n";
      }
      for (const OptionalPhrase &o : r.optionals) {
        optionals_jsonl += OptionalToJsonLine(o, r.graph);
      }
      WriteFile(dir / "pairs.jsonl", pairs_jsonl);
      WriteFile(dir / "optionals.jsonl", optionals_jsonl);
      WriteFile(dir / "groups.json", GroupsToJson(r.groups));
      if (config.write_json)
        WriteFile(dir / "graph.json", ExportedGraphJson(r, config));
      if (config.write_dot)
        WriteFile(dir / "graph.dot", ExportedGraphDot(r, config));
      if (config.write_tsv) WriteFile(dir / "pairs.tsv", pairs_tsv);

      const std::size_t n = r.doc.sentences.size();
      const double seconds = std::chrono::duration<double>(
                                 std::chrono::steady_clock::now() - started)
                                 .count();
      ordered_json run;
      run["command"] = "mine";
      run["config"] = ConfigEcho(config);
      run["domain"] = r.doc.label;
      run["counts"] = {{"sentences", n},
                       {"alignments", r.alignments.size()},
                       {"expected_alignments", n * (n - 1) / 2},
                       {"groups", r.groups.size()},
                       {"nodes", r.graph.nodes().size()},
                       {"edges", r.graph.edges().size()},
                       {"candidate_sets", r.candidates.size()},
                       {"pairs", r.pairs.size()},
                       {"optionals", r.optionals.size()}};
      run["wall_time_seconds"] = seconds;
      WriteFile(dir / "run.json", run.dump(2) + "\n");
    }
  });
}

int CmdGraph(const RunConfig &raw, std::ostream &err) {
  return Guarded(err, [&] {
    const RunConfig config = ResolveResources(raw);
    for (const fs::path &input : config.inputs) {
      Document doc = LoadInput(input, config);
      AlignmentSet alignments =
          AlignAllPairs(doc, config.aligner, config.threads);
      auto groups = PartitionIntoGroups(doc, alignments, config.compat);
      WordAlignmentGraph graph = BuildGraph(doc, groups);
      if (config.strip_punct) graph = StripPunctuation(graph);
      const fs::path dir = OutDirFor(input, config);
      WriteFile(dir / "graph.json", GraphToJson(graph));
      WriteFile(dir / "graph.dot", GraphToDot(graph, doc.label));
    }
  });
}

int CmdClean(const RunConfig &raw, std::ostream &err) {
  return Guarded(err, [&] {
    const RunConfig config = ResolveResources(raw);
    for (const fs::path &input : config.inputs) {
      PipelineResult r = RunPipeline(LoadInput(input, config), config);
      std::string text;
      for (const Sentence &s : r.doc.sentences) {
        text += JoinWords(EssentialForm(s, r.optionals, r.graph)) + "\n";
      }
      WriteFile(OutDirFor(input, config) / "essential.txt", text);
    }
  });
}

int CmdEval(const RunConfig &raw, std::ostream &err) {
  return Guarded(err, [&] {
    if (!raw.db_path) {
      throw Error(ErrorCode::kInvalidConfig, "eval requires --db");
    }
    const RunConfig config = ResolveResources(raw);
    const ParaphraseDb db = ParaphraseDb::Load(*config.db_path);
    std::optional<LabeledPairs> labels;
    if (config.labels_path) labels = LoadLabels(*config.labels_path);

    for (const fs::path &input : config.inputs) {
      std::vector<ParaphrasePair> pairs =
          input.extension() == ".jsonl"
              ? ReadPairsJsonl(input)
              : RunPipeline(LoadInput(input, config), config).pairs;
      const fs::path dir = OutDirFor(input, config);

      CoverageReport coverage = DbCoverage(pairs, db, config.stemmed_lookup);
      ordered_json c;
      c["source"] = coverage.source_name;
      c["total"] = coverage.total;
      c["found"] = coverage.found;
      c["fraction"] = coverage.fraction;
      c["stemmed"] = config.stemmed_lookup;
      c["db_skipped_lines"] = db.skipped_lines();
      WriteFile(dir / "coverage.json", c.dump(2) + "\n");

      if (labels) {
        PrecisionReport report = MakePrecisionReport(pairs, *labels);
        ordered_json p;
        p["extracted"] = report.extracted;
        p["valid"] = report.valid;
        p["unjudged"] = report.unjudged;
        p["precision"] = report.precision ? ordered_json(*report.precision)
                                          : ordered_json(nullptr);
        WriteFile(dir / "precision.json", p.dump(2) + "\n");
      }
    }
  });
}

}  // namespace essentia
