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

#ifndef EVIDENCE_FRAME_H_
#define EVIDENCE_FRAME_H_

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace evidence {

// Largest frame supported; focal sets are stored as 64-bit masks.
inline constexpr int kMaxFrameSize = 64;

// An ordered frame of discernment. Element i (1-based) is the i-th label, and
// the ordinal distance |i - j| is what the correlation matrix measures.
class Frame {
 public:
  // Throws ValidationError on an empty list, a duplicate label, or more than
  // kMaxFrameSize labels.
  explicit Frame(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }

  // 1-based.
  const std::string& label(int index) const;
  std::optional<int> index_of(const std::string& label) const;

  friend bool operator==(const Frame& a, const Frame& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, int> index_;
};

using FramePtr = std::shared_ptr<const Frame>;

FramePtr build_frame(std::vector<std::string> labels);

// Frame {"1", "2", ..., "n"}.
FramePtr numbered_frame(int n);

// Same frame by identity or by labels.
bool same_frame(const FramePtr& a, const FramePtr& b);

// A non-empty subset of a frame of `universe` elements, stored as a bit mask
// where bit i-1 stands for element i.
class FocalSet {
 public:
  // Throws ValidationError if the mask is empty or has bits outside the universe.
  FocalSet(std::uint64_t bits, int universe);

  // 1-based member indices.
  static FocalSet of(int universe, std::initializer_list<int> members);
  static FocalSet of(int universe, std::span<const int> members);
  static FocalSet singleton(int universe, int member);
  // {first, ..., last}
  static FocalSet range(int universe, int first, int last);
  static FocalSet whole(int universe);

  std::uint64_t bits() const { return bits_; }
  int universe() const { return universe_; }
  int cardinality() const { return std::popcount(bits_); }
  bool contains(int member) const;
  bool is_singleton() const { return cardinality() == 1; }

  // Ascending 1-based member indices.
  std::vector<int> members() const;

  friend bool operator==(const FocalSet&, const FocalSet&) = default;
  friend auto operator<=>(const FocalSet& a, const FocalSet& b) {
    if (auto c = a.universe_ <=> b.universe_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  std::uint64_t bits_;
  int universe_;
};

std::uint64_t full_mask(int universe);

// Subset of `frame` named by labels; throws ValidationError on an unknown label
// or an empty list.
FocalSet subset_of(const Frame& frame, std::span<const std::string> labels);

// "{Poor,Low}"
std::string format_set(const Frame& frame, const FocalSet& set);

}  // namespace evidence

#endif  // EVIDENCE_FRAME_H_
