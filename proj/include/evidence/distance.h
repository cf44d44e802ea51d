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

#ifndef EVIDENCE_DISTANCE_H_
#define EVIDENCE_DISTANCE_H_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "evidence/bba.h"
#include "evidence/pignistic.h"

namespace evidence {

// Radicands down to this value are clamped to 0 before the square root.
inline constexpr double kRadicandClampTolerance = 1e-12;

// |A n B| / |A u B|. Throws FrameMismatch.
double jaccard_similarity(const FocalSet& a, const FocalSet& b);

// Jaccard similarities restricted to the focal sets of two BBAs.
struct JaccardMatrix {
  std::vector<FocalSet> focal_list;
  Eigen::MatrixXd entries;
};

JaccardMatrix jaccard_matrix(const Bba& m1, const Bba& m2);

// Jousselme's distance sqrt(1/2 (m1 - m2)^T D (m1 - m2)), evaluated on the
// union of the two focal lists.
double jousselme_distance(const Bba& m1, const Bba& m2);

// Ordinal closeness between frame elements: s_ij = 1 - |i - j| / (N - 1),
// and the 1x1 identity for N = 1.
class CorrelationMatrix {
 public:
  explicit CorrelationMatrix(int n);

  int size() const { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const { return entries_; }
  // 1-based.
  double operator()(int i, int j) const { return entries_(i - 1, j - 1); }

 private:
  Eigen::MatrixXd entries_;
};

// Shared, lazily built matrix for frames of size n. Safe to call concurrently.
// Throws ValidationError when n < 1.
const CorrelationMatrix& correlation_matrix(int n);

// sqrt(1/2 d^T M d) with tiny negative radicands clamped to 0. Throws
// NumericalError if the radicand is below -kRadicandClampTolerance.
double quadratic_distance(const Eigen::VectorXd& diff, const Eigen::MatrixXd& metric);

// Ranking evidence distance: both BBAs go through the pignistic transform and
// the difference of the resulting singleton vectors is weighed by the
// correlation matrix of the frame.
double red_distance(const Bba& m1, const Bba& m2);

// Same construction with a caller-supplied N x N closeness matrix in place of
// the correlation matrix.
double red_distance_with(const Bba& m1, const Bba& m2, const Eigen::MatrixXd& closeness);

// BBA with the pignistic probabilities of `bba` as singleton masses.
Bba pignistic_bba(const Bba& bba);

// (RED with an identity closeness matrix, Jousselme between the pignistic
// singleton BBAs). The two agree when the frame carries no ordering.
std::pair<double, double> red_reduces_to_jousselme(const Bba& m1, const Bba& m2);

// A selectable distance between two BBAs on the same frame.
struct DistanceMeasure {
  enum class Kind { kJousselme, kBettingCommitments, kRed };

  Kind kind = Kind::kRed;
  BetPMode mode = BetPMode::kAllSubsets;

  static DistanceMeasure jousselme() { return {Kind::kJousselme}; }
  static DistanceMeasure betting(BetPMode m = BetPMode::kAllSubsets) {
    return {Kind::kBettingCommitments, m};
  }
  static DistanceMeasure red() { return {Kind::kRed}; }

  // "red", "jousselme", "betp", "betp:all", "betp:singleton", "betp:focal".
  // Throws ValidationError on anything else.
  static DistanceMeasure parse(std::string_view text);

  std::string name() const;

  double operator()(const Bba& m1, const Bba& m2) const;

  friend bool operator==(const DistanceMeasure&, const DistanceMeasure&) = default;
};

}  // namespace evidence

#endif  // EVIDENCE_DISTANCE_H_
