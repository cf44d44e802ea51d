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

#include "evidence/bba.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "evidence/errors.h"

namespace evidence {

namespace {

// Decimal inputs right at the tolerance boundary pick up a few ulps when summed.
constexpr double kSumRoundingSlack = 1e-15;

}  // namespace

Bba::Bba(FramePtr frame, std::vector<FocalEntry> entries, BbaOptions options)
    : frame_(std::move(frame)) {
  if (!frame_) throw ValidationError("bba requires a frame");
  const int n = frame_->size();

  double total = 0.0;
  for (const auto& e : entries) {
    if (e.set.universe() != n) throw FrameMismatch();
    if (!std::isfinite(e.mass)) throw ValidationError("mass must be finite");
    if (e.mass < 0.0) {
      throw ValidationError("negative mass " + std::to_string(e.mass) + " on " +
                            format_set(*frame_, e.set));
    }
    total += e.mass;
  }

  if (options.renormalize) {
    if (!(total > 0.0)) throw ValidationError("cannot renormalize masses summing to 0");
    for (auto& e : entries) e.mass /= total;
  } else if (std::abs(total - 1.0) > kMassSumTolerance + kSumRoundingSlack) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", total);
    throw ValidationError(std::string("masses sum to ") + buf + ", expected 1");
  }

  std::stable_sort(entries.begin(), entries.end(),
                   [](const FocalEntry& a, const FocalEntry& b) { return a.set < b.set; });
  for (const auto& e : entries) {
    if (!entries_.empty() && entries_.back().set == e.set) {
      entries_.back().mass += e.mass;
    } else {
      entries_.push_back(e);
    }
  }
  std::erase_if(entries_, [](const FocalEntry& e) { return e.mass == 0.0; });
  if (entries_.empty()) throw ValidationError("bba has no focal elements");
}

double Bba::mass_of(const FocalSet& set) const {
  if (set.universe() != frame_size()) throw FrameMismatch();
  auto it = std::lower_bound(entries_.begin(), entries_.end(), set,
                             [](const FocalEntry& e, const FocalSet& s) { return e.set < s; });
  return it != entries_.end() && it->set == set ? it->mass : 0.0;
}

bool operator==(const Bba& a, const Bba& b) {
  return same_frame(a.frame_, b.frame_) && a.entries_ == b.entries_;
}

Bba build_bba(FramePtr frame, std::vector<FocalEntry> entries, BbaOptions options) {
  return Bba(std::move(frame), std::move(entries), options);
}

Bba vacuous_bba(FramePtr frame) {
  const int n = frame->size();
  return Bba(std::move(frame), {{FocalSet::whole(n), 1.0}});
}

Bba categorical_bba(FramePtr frame, int member) {
  const int n = frame->size();
  return Bba(std::move(frame), {{FocalSet::singleton(n, member), 1.0}});
}

void require_same_frame(const Bba& a, const Bba& b) {
  if (!same_frame(a.frame_ptr(), b.frame_ptr())) throw FrameMismatch();
}

}  // namespace evidence
