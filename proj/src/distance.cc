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

#include "evidence/distance.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>

#include "evidence/errors.h"

namespace evidence {

double jaccard_similarity(const FocalSet& a, const FocalSet& b) {
  if (a.universe() != b.universe()) throw FrameMismatch();
  const int meet = std::popcount(a.bits() & b.bits());
  const int join = std::popcount(a.bits() | b.bits());
  return static_cast<double>(meet) / join;
}

JaccardMatrix jaccard_matrix(const Bba& m1, const Bba& m2) {
  require_same_frame(m1, m2);
  JaccardMatrix out;
  for (const auto& e : m1.focal_elements()) out.focal_list.push_back(e.set);
  for (const auto& e : m2.focal_elements()) out.focal_list.push_back(e.set);
  std::sort(out.focal_list.begin(), out.focal_list.end());
  out.focal_list.erase(std::unique(out.focal_list.begin(), out.focal_list.end()),
                       out.focal_list.end());

  const auto k = static_cast<Eigen::Index>(out.focal_list.size());
  out.entries.resize(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    out.entries(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < k; ++j) {
      out.entries(i, j) = out.entries(j, i) = jaccard_similarity(out.focal_list[i], out.focal_list[j]);
    }
  }
  return out;
}

double quadratic_distance(const Eigen::VectorXd& diff, const Eigen::MatrixXd& metric) {
  double radicand = 0.5 * diff.dot(metric * diff);
  if (radicand < 0.0) {
    if (radicand < -kRadicandClampTolerance) {
      throw NumericalError("negative radicand " + std::to_string(radicand) + " in distance");
    }
    radicand = 0.0;
  }
  return std::sqrt(radicand);
}

double jousselme_distance(const Bba& m1, const Bba& m2) {
  const JaccardMatrix d = jaccard_matrix(m1, m2);
  Eigen::VectorXd diff(static_cast<Eigen::Index>(d.focal_list.size()));
  for (std::size_t i = 0; i < d.focal_list.size(); ++i) {
    diff(static_cast<Eigen::Index>(i)) = m1.mass_of(d.focal_list[i]) - m2.mass_of(d.focal_list[i]);
  }
  return quadratic_distance(diff, d.entries);
}

CorrelationMatrix::CorrelationMatrix(int n) {
  if (n < 1) throw ValidationError("correlation matrix needs a frame of at least one element");
  entries_.resize(n, n);
  if (n == 1) {
    entries_(0, 0) = 1.0;
    return;
  }
  const double step = 1.0 / (n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) entries_(i, j) = 1.0 - std::abs(i - j) * step;
  }
}

const CorrelationMatrix& correlation_matrix(int n) {
  static std::shared_mutex mutex;
  static std::map<int, std::unique_ptr<const CorrelationMatrix>> cache;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<const CorrelationMatrix>(n);
  std::unique_lock lock(mutex);
  auto [it, inserted] = cache.try_emplace(n, std::move(built));
  return *it->second;
}

namespace {

Eigen::VectorXd pignistic_difference(const Bba& m1, const Bba& m2) {
  require_same_frame(m1, m2);
  const auto p1 = ppt(m1);
  const auto p2 = ppt(m2);
  const auto n = static_cast<Eigen::Index>(p1.probabilities().size());
  return Eigen::Map<const Eigen::VectorXd>(p1.probabilities().data(), n) -
         Eigen::Map<const Eigen::VectorXd>(p2.probabilities().data(), n);
}

}  // namespace

double red_distance(const Bba& m1, const Bba& m2) {
  const Eigen::VectorXd diff = pignistic_difference(m1, m2);
  return quadratic_distance(diff, correlation_matrix(m1.frame_size()).entries());
}

double red_distance_with(const Bba& m1, const Bba& m2, const Eigen::MatrixXd& closeness) {
  const Eigen::VectorXd diff = pignistic_difference(m1, m2);
  if (closeness.rows() != diff.size() || closeness.cols() != diff.size()) {
    throw ValidationError("closeness matrix must be " + std::to_string(diff.size()) + "x" +
                          std::to_string(diff.size()));
  }
  return quadratic_distance(diff, closeness);
}

Bba pignistic_bba(const Bba& bba) {
  const auto p = ppt(bba);
  const int n = bba.frame_size();
  std::vector<FocalEntry> entries;
  for (int i = 1; i <= n; ++i) {
    if (p.at(i) > 0.0) entries.push_back({FocalSet::singleton(n, i), p.at(i)});
  }
  return Bba(bba.frame_ptr(), std::move(entries));
}

std::pair<double, double> red_reduces_to_jousselme(const Bba& m1, const Bba& m2) {
  require_same_frame(m1, m2);
  const int n = m1.frame_size();
  const double red = red_distance_with(m1, m2, Eigen::MatrixXd::Identity(n, n));
  const double jousselme = jousselme_distance(pignistic_bba(m1), pignistic_bba(m2));
  return {red, jousselme};
}

DistanceMeasure DistanceMeasure::parse(std::string_view text) {
  if (text == "red") return red();
  if (text == "jousselme") return jousselme();
  if (text == "betp" || text == "betp:all") return betting(BetPMode::kAllSubsets);
  if (text == "betp:singleton") return betting(BetPMode::kSingletons);
  if (text == "betp:focal") return betting(BetPMode::kFocalSets);
  throw ValidationError("unknown distance measure '" + std::string(text) +
                        "' (expected red, jousselme or betp[:all|singleton|focal])");
}

std::string DistanceMeasure::name() const {
  switch (kind) {
    case Kind::kJousselme:
      return "jousselme";
    case Kind::kBettingCommitments:
      return "betp:" + std::string(to_string(mode));
    case Kind::kRed:
      return "red";
  }
  return "?";
}

double DistanceMeasure::operator()(const Bba& m1, const Bba& m2) const {
  switch (kind) {
    case Kind::kJousselme:
      return jousselme_distance(m1, m2);
    case Kind::kBettingCommitments:
      return dif_betp(m1, m2, mode);
    case Kind::kRed:
      return red_distance(m1, m2);
  }
  return 0.0;
}

}  // namespace evidence
