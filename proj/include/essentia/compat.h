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

#ifndef ESSENTIA_COMPAT_H_
#define ESSENTIA_COMPAT_H_

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "essentia/aligner.h"
#include "essentia/corpus.h"

namespace essentia {

enum class ViolationKind {
  kInjectivity,
  kMonotonicity,
  kTransitivity,
  // Contracting the group's alignments would put two tokens of one sentence
  // into the same node, or would close a cycle.
  kContraction,
};

std::string_view ViolationKindName(ViolationKind kind);

struct Witness {
  SentenceId sentence{};
  std::uint32_t position = 0;

  auto operator<=>(const Witness &) const = default;
};

struct Violation {
  ViolationKind kind = ViolationKind::kInjectivity;
  std::vector<Witness> witnesses;
};

enum class TransitivityPolicy {
  // Only contradictory direct pairs violate transitivity.
  kLenient,
  // Every chain w1 -> w2 -> w3 also requires the direct pair (w1, w3).
  kStrictClosure,
};

struct CompatConfig {
  TransitivityPolicy transitivity = TransitivityPolicy::kLenient;
};

std::vector<Violation> CheckInjectivity(const Alignment &alignment);
std::vector<Violation> CheckMonotonicity(const Alignment &alignment);
std::vector<Violation> CheckTransitivity(
    std::span<const SentenceId> members, const AlignmentSet &alignments,
    TransitivityPolicy policy = TransitivityPolicy::kLenient);
std::vector<Violation> CheckContraction(std::span<const SentenceId> members,
                                        const AlignmentSet &alignments,
                                        const Document &doc);

// All of the above over every member pair and triple.
std::vector<Violation> CheckGroup(std::span<const SentenceId> members,
                                  const AlignmentSet &alignments,
                                  const Document &doc,
                                  const CompatConfig &config = {});

struct CompatibleGroup {
  std::vector<SentenceId> members;
  // Restriction of the document alignments to member pairs.
  AlignmentSet alignments;
};

// Greedy first-fit partition in document order.
std::vector<CompatibleGroup> PartitionIntoGroups(
    const Document &doc, const AlignmentSet &alignments,
    const CompatConfig &config = {});

}  // namespace essentia

#endif  // ESSENTIA_COMPAT_H_
