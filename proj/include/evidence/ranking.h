/*
 * Copyright 2026 The Evidence Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef EVIDENCE_RANKING_H_
#define EVIDENCE_RANKING_H_

#include <string>
#include <vector>

#include "evidence/bba.h"
#include "evidence/distance.h"

namespace evidence {

// Distances within this tolerance of each other are ties.
inline constexpr double kTieTolerance = 1e-12;

struct NamedBba {
  std::string name;
  Bba bba;
};

struct RankedCandidate {
  std::string name;
  double distance;
  int rank;  // 1-based position in the ranking
  bool tied;  // shares its distance with a neighbour

  friend bool operator==(const RankedCandidate&, const RankedCandidate&) = default;
};

struct RankingResult {
  std::string reference;
  DistanceMeasure measure;
  std::vector<RankedCandidate> entries;  // ascending distance
};

// Scores every candidate against `reference` and sorts by ascending distance.
// Ties keep their input order and are flagged. Throws ValidationError on an
// empty candidate list and FrameMismatch if frames differ.
RankingResult rank_by_distance(const NamedBba& reference, const std::vector<NamedBba>& candidates,
                               const DistanceMeasure& measure = DistanceMeasure::red());

}  // namespace evidence

#endif  // EVIDENCE_RANKING_H_
