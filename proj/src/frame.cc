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

#include "evidence/frame.h"

#include <algorithm>

#include "evidence/errors.h"

namespace evidence {

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw ValidationError("frame must contain at least one label");
  if (labels_.size() > static_cast<std::size_t>(kMaxFrameSize)) {
    throw ValidationError("frame has " + std::to_string(labels_.size()) + " labels; at most " +
                          std::to_string(kMaxFrameSize) + " are supported");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ValidationError("frame labels must be non-empty");
    auto [it, inserted] = index_.emplace(labels_[i], static_cast<int>(i) + 1);
    if (!inserted) throw ValidationError("duplicate label '" + labels_[i] + "' in frame");
  }
}

const std::string& Frame::label(int index) const {
  if (index < 1 || index > size()) {
    throw ValidationError("element index " + std::to_string(index) + " outside 1.." +
                          std::to_string(size()));
  }
  return labels_[index - 1];
}

std::optional<int> Frame::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FramePtr build_frame(std::vector<std::string> labels) {
  return std::make_shared<const Frame>(std::move(labels));
}

FramePtr numbered_frame(int n) {
  std::vector<std::string> labels;
  labels.reserve(n > 0 ? n : 0);
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return build_frame(std::move(labels));
}

bool same_frame(const FramePtr& a, const FramePtr& b) {
  return a == b || (a && b && *a == *b);
}

std::uint64_t full_mask(int universe) {
  return universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
}

FocalSet::FocalSet(std::uint64_t bits, int universe) : bits_(bits), universe_(universe) {
  if (universe < 1 || universe > kMaxFrameSize) {
    throw ValidationError("focal set universe must be within 1.." + std::to_string(kMaxFrameSize));
  }
  if (bits == 0) throw ValidationError("focal set must be non-empty");
  if ((bits & ~full_mask(universe)) != 0) {
    throw ValidationError("focal set has elements outside 1.." + std::to_string(universe));
  }
}

FocalSet FocalSet::of(int universe, std::initializer_list<int> members) {
  return of(universe, std::span<const int>(members.begin(), members.size()));
}

FocalSet FocalSet::of(int universe, std::span<const int> members) {
  std::uint64_t bits = 0;
  for (int m : members) {
    if (m < 1 || m > universe) {
      throw ValidationError("element index " + std::to_string(m) + " outside 1.." +
                            std::to_string(universe));
    }
    bits |= std::uint64_t{1} << (m - 1);
  }
  return FocalSet(bits, universe);
}

FocalSet FocalSet::singleton(int universe, int member) { return of(universe, {member}); }

FocalSet FocalSet::range(int universe, int first, int last) {
  if (first < 1 || last > universe || first > last) {
    throw ValidationError("invalid element range " + std::to_string(first) + ".." +
                          std::to_string(last));
  }
  std::uint64_t bits = full_mask(last) & ~full_mask(first - 1);
  return FocalSet(bits, universe);
}

FocalSet FocalSet::whole(int universe) { return FocalSet(full_mask(universe), universe); }

bool FocalSet::contains(int member) const {
  return member >= 1 && member <= universe_ && ((bits_ >> (member - 1)) & 1U) != 0;
}

std::vector<int> FocalSet::members() const {
  std::vector<int> out;
  out.reserve(cardinality());
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

FocalSet subset_of(const Frame& frame, std::span<const std::string> labels) {
  std::vector<int> members;
  members.reserve(labels.size());
  for (const auto& label : labels) {
    auto index = frame.index_of(label);
    if (!index) throw ValidationError("unknown element '" + label + "'");
    members.push_back(*index);
  }
  return FocalSet::of(frame.size(), members);
}

std::string format_set(const Frame& frame, const FocalSet& set) {
  std::string out = "{";
  bool first = true;
  for (int m : set.members()) {
    if (!first) out += ',';
    out += frame.label(m);
    first = false;
  }
  out += '}';
  return out;
}

}  // namespace evidence
