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

#ifndef EVIDENCE_PIGNISTIC_H_
#define EVIDENCE_PIGNISTIC_H_

#include <string_view>
#include <vector>

#include "evidence/bba.h"

namespace evidence {

// Pignistic probabilities of the singletons of a frame.
class PignisticDistribution {
 public:
  PignisticDistribution(FramePtr frame, std::vector<double> probabilities);

  const Frame& frame() const { return *frame_; }
  const FramePtr& frame_ptr() const { return frame_; }
  const std::vector<double>& probabilities() const { return probabilities_; }

  // 1-based.
  double at(int member) const { return probabilities_.at(member - 1); }

 private:
  FramePtr frame_;
  std::vector<double> probabilities_;
};

// Which subsets the betting-commitment distance maximizes over.
enum class BetPMode {
  kAllSubsets,  // every A of the frame
  kSingletons,  // {x} only
  kFocalSets,   // focal sets of either BBA
};

std::string_view to_string(BetPMode mode);

// BetP({x}) = sum over focal A containing x of m(A) / |A|.
PignisticDistribution ppt(const Bba& bba);

// BetP(A) = sum of BetP({x}) over x in A. Throws FrameMismatch.
double betp_of_subset(const PignisticDistribution& p, const FocalSet& set);

// Largest |BetP_m1(A) - BetP_m2(A)| over the subsets selected by `mode`.
// kAllSubsets uses the total variation identity: the maximum equals the sum
// of the positive parts of BetP_m1 - BetP_m2.
double dif_betp(const Bba& m1, const Bba& m2, BetPMode mode = BetPMode::kAllSubsets);

}  // namespace evidence

#endif  // EVIDENCE_PIGNISTIC_H_
