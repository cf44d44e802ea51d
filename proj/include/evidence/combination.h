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

#ifndef EVIDENCE_COMBINATION_H_
#define EVIDENCE_COMBINATION_H_

#include <span>

#include "evidence/bba.h"

namespace evidence {

// k within this distance of 1 is treated as total conflict.
inline constexpr double kTotalConflictTolerance = 1e-12;

// Mass jointly committed to disjoint focal pairs, in [0, 1].
class ConflictCoefficient {
 public:
  explicit ConflictCoefficient(double k);

  double value() const { return k_; }
  bool is_total() const { return k_ >= 1.0 - kTotalConflictTolerance; }

 private:
  double k_;
};

// k = sum of m1(B) m2(C) over B, C with empty intersection.
ConflictCoefficient conflict(const Bba& m1, const Bba& m2);

// Dempster's orthogonal sum m1 (+) m2. Throws FrameMismatch, or TotalConflict
// when k is 1 within kTotalConflictTolerance.
Bba combine_dempster(const Bba& m1, const Bba& m2);

// Left fold of combine_dempster over a non-empty list.
Bba combine_all(std::span<const Bba> bbas);

}  // namespace evidence

#endif  // EVIDENCE_COMBINATION_H_
