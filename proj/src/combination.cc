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

#include "evidence/combination.h"

#include <algorithm>
#include <map>
#include <string>

#include "evidence/errors.h"

namespace evidence {

ConflictCoefficient::ConflictCoefficient(double k) : k_(std::clamp(k, 0.0, 1.0)) {
  if (k < -kMassSumTolerance || k > 1.0 + kMassSumTolerance) {
    throw ValidationError("conflict coefficient " + std::to_string(k) + " outside [0, 1]");
  }
}

ConflictCoefficient conflict(const Bba& m1, const Bba& m2) {
  require_same_frame(m1, m2);
  double k = 0.0;
  for (const auto& b : m1.focal_elements()) {
    for (const auto& c : m2.focal_elements()) {
      if ((b.set.bits() & c.set.bits()) == 0) k += b.mass * c.mass;
    }
  }
  return ConflictCoefficient(k);
}

Bba combine_dempster(const Bba& m1, const Bba& m2) {
  require_same_frame(m1, m2);
  const int n = m1.frame_size();

  std::map<std::uint64_t, double> joint;
  double k = 0.0;
  for (const auto& b : m1.focal_elements()) {
    for (const auto& c : m2.focal_elements()) {
      const std::uint64_t meet = b.set.bits() & c.set.bits();
      const double product = b.mass * c.mass;
      if (meet == 0) {
        k += product;
      } else {
        joint[meet] += product;
      }
    }
  }
  const ConflictCoefficient coefficient(k);
  if (coefficient.is_total()) {
    throw TotalConflict("total conflict (k = " + std::to_string(coefficient.value()) +
                        "): the orthogonal sum does not exist");
  }

  const double norm = 1.0 - coefficient.value();
  std::vector<FocalEntry> entries;
  entries.reserve(joint.size());
  for (const auto& [bits, mass] : joint) entries.push_back({FocalSet(bits, n), mass / norm});
  return Bba(m1.frame_ptr(), std::move(entries));
}

Bba combine_all(std::span<const Bba> bbas) {
  if (bbas.empty()) throw ValidationError("nothing to combine");
  Bba acc = bbas.front();
  for (const auto& m : bbas.subspan(1)) acc = combine_dempster(acc, m);
  return acc;
}

}  // namespace evidence
