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

#include "evidence/ranking.h"

#include <algorithm>
#include <cmath>

#include "evidence/errors.h"

namespace evidence {

RankingResult rank_by_distance(const NamedBba& reference, const std::vector<NamedBba>& candidates,
                               const DistanceMeasure& measure) {
  if (candidates.empty()) throw ValidationError("ranking needs at least one candidate");

  RankingResult result{reference.name, measure, {}};
  result.entries.reserve(candidates.size());
  for (const auto& c : candidates) {
    require_same_frame(reference.bba, c.bba);
    result.entries.push_back({c.name, measure(reference.bba, c.bba), 0, false});
  }

  // Exact sort, then restore input order inside each run of ties.
  std::vector<std::size_t> order(result.entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return result.entries[a].distance < result.entries[b].distance;
  });
  for (std::size_t begin = 0; begin < order.size();) {
    std::size_t end = begin + 1;
    while (end < order.size() &&
           std::abs(result.entries[order[end]].distance - result.entries[order[end - 1]].distance) <=
               kTieTolerance) {
      ++end;
    }
    std::sort(order.begin() + begin, order.begin() + end);
    begin = end;
  }

  std::vector<RankedCandidate> sorted;
  sorted.reserve(order.size());
  for (std::size_t i : order) sorted.push_back(result.entries[i]);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    sorted[i].rank = static_cast<int>(i) + 1;
    const bool prev = i > 0 && std::abs(sorted[i].distance - sorted[i - 1].distance) <= kTieTolerance;
    const bool next = i + 1 < sorted.size() &&
                      std::abs(sorted[i + 1].distance - sorted[i].distance) <= kTieTolerance;
    sorted[i].tied = prev || next;
  }
  result.entries = std::move(sorted);
  return result;
}

}  // namespace evidence
