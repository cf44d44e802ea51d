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

#ifndef EVIDENCE_BBA_H_
#define EVIDENCE_BBA_H_

#include <span>
#include <utility>
#include <vector>

#include "evidence/frame.h"

namespace evidence {

// Masses must sum to 1 within this tolerance.
inline constexpr double kMassSumTolerance = 1e-9;

struct FocalEntry {
  FocalSet set;
  double mass;

  friend bool operator==(const FocalEntry&, const FocalEntry&) = default;
};

struct BbaOptions {
  // Divide every mass by the total instead of rejecting a sum away from 1.
  bool renormalize = false;
};

// Basic belief assignment (mass function) on a frame, closed world: the empty
// set never carries mass. Focal entries are kept sorted by set mask and each
// set appears once.
class Bba {
 public:
  // Validates and canonicalizes `entries`: duplicate sets are merged by summing,
  // zero masses are dropped. Throws FrameMismatch if a set was built for another
  // frame size, ValidationError on negative masses or a sum outside 1 +- 1e-9.
  Bba(FramePtr frame, std::vector<FocalEntry> entries, BbaOptions options = {});

  const FramePtr& frame_ptr() const { return frame_; }
  const Frame& frame() const { return *frame_; }
  int frame_size() const { return frame_->size(); }
  std::span<const FocalEntry> focal_elements() const { return entries_; }

  // Mass of `set`, 0 when it is not focal. Throws FrameMismatch.
  double mass_of(const FocalSet& set) const;

  bool is_categorical() const { return entries_.size() == 1 && entries_.front().set.is_singleton(); }

  friend bool operator==(const Bba& a, const Bba& b);

 private:
  FramePtr frame_;
  std::vector<FocalEntry> entries_;
};

Bba build_bba(FramePtr frame, std::vector<FocalEntry> entries, BbaOptions options = {});

// m(Theta) = 1.
Bba vacuous_bba(FramePtr frame);

// m({member}) = 1; member is 1-based.
Bba categorical_bba(FramePtr frame, int member);

inline double mass_of(const Bba& bba, const FocalSet& set) { return bba.mass_of(set); }

// Throws FrameMismatch unless both operands share a frame.
void require_same_frame(const Bba& a, const Bba& b);

}  // namespace evidence

#endif  // EVIDENCE_BBA_H_
