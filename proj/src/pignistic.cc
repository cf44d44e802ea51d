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

#include "evidence/pignistic.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "evidence/errors.h"

namespace evidence {

PignisticDistribution::PignisticDistribution(FramePtr frame, std::vector<double> probabilities)
    : frame_(std::move(frame)), probabilities_(std::move(probabilities)) {
  if (static_cast<int>(probabilities_.size()) != frame_->size()) {
    throw ValidationError("pignistic vector length does not match the frame");
  }
}

std::string_view to_string(BetPMode mode) {
  switch (mode) {
    case BetPMode::kAllSubsets:
      return "all";
    case BetPMode::kSingletons:
      return "singleton";
    case BetPMode::kFocalSets:
      return "focal";
  }
  return "?";
}

PignisticDistribution ppt(const Bba& bba) {
  // m(empty) = 0 always holds, so the 1 - m(empty) normalizer is 1.
  std::vector<double> p(bba.frame_size(), 0.0);
  for (const auto& e : bba.focal_elements()) {
    const double share = e.mass / e.set.cardinality();
    for (std::uint64_t b = e.set.bits(); b != 0; b &= b - 1) p[std::countr_zero(b)] += share;
  }
  return PignisticDistribution(bba.frame_ptr(), std::move(p));
}

double betp_of_subset(const PignisticDistribution& p, const FocalSet& set) {
  if (set.universe() != p.frame().size()) throw FrameMismatch();
  double sum = 0.0;
  for (std::uint64_t b = set.bits(); b != 0; b &= b - 1) sum += p.probabilities()[std::countr_zero(b)];
  return sum;
}

namespace {

double subset_gap(const std::vector<double>& diff, std::uint64_t bits) {
  double sum = 0.0;
  for (; bits != 0; bits &= bits - 1) sum += diff[std::countr_zero(bits)];
  return std::abs(sum);
}

}  // namespace

double dif_betp(const Bba& m1, const Bba& m2, BetPMode mode) {
  require_same_frame(m1, m2);
  const auto p1 = ppt(m1);
  const auto p2 = ppt(m2);
  const std::size_t n = p1.probabilities().size();
  std::vector<double> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = p1.probabilities()[i] - p2.probabilities()[i];

  double best = 0.0;
  switch (mode) {
    case BetPMode::kAllSubsets: {
      // Both vectors sum to 1, so the positive and negative parts balance and
      // the best subset collects every positive coordinate.
      double positive = 0.0;
      double negative = 0.0;
      for (double d : diff) (d > 0.0 ? positive : negative) += d;
      best = std::max(positive, -negative);
      break;
    }
    case BetPMode::kSingletons:
      for (double d : diff) best = std::max(best, std::abs(d));
      break;
    case BetPMode::kFocalSets:
      for (const auto& e : m1.focal_elements()) best = std::max(best, subset_gap(diff, e.set.bits()));
      for (const auto& e : m2.focal_elements()) best = std::max(best, subset_gap(diff, e.set.bits()));
      break;
  }
  return std::clamp(best, 0.0, 1.0);
}

}  // namespace evidence
