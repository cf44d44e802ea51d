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

#include "evidence/repro.h"

#include <array>
#include <cmath>
#include <future>

#include "evidence/errors.h"

namespace evidence {

namespace {

struct ReferenceCell {
  int example;
  const char* pair;
  DistanceMeasure measure;
  double value;
};

// Comparison table as printed, row by row.
const std::array<ReferenceCell, 18>& reference_examples() {
  static const std::array<ReferenceCell, 18> cells = {{
      {2, "m1,m2", DistanceMeasure::jousselme(), 1.0},
      {2, "m1,m3", DistanceMeasure::jousselme(), 1.0},
      {3, "m1,m2", DistanceMeasure::jousselme(), 1.0},
      {3, "m1,m3", DistanceMeasure::jousselme(), 1.0},
      {4, "m1,m2", DistanceMeasure::jousselme(), 1.0},
      {4, "m1,m3", DistanceMeasure::jousselme(), 1.0},
      {2, "m1,m2", DistanceMeasure::betting(), 1.0},
      {2, "m1,m3", DistanceMeasure::betting(), 1.0},
      {3, "m1,m2", DistanceMeasure::betting(), 1.0},
      {3, "m1,m3", DistanceMeasure::betting(), 1.0},
      {4, "m1,m2", DistanceMeasure::betting(), 0.5},
      {4, "m1,m3", DistanceMeasure::betting(), 0.5},
      {2, "m1,m2", DistanceMeasure::red(), 0.5},
      {2, "m1,m3", DistanceMeasure::red(), 0.707},
      {3, "m1,m2", DistanceMeasure::red(), 0.559},
      {3, "m1,m3", DistanceMeasure::red(), 0.901},
      {4, "m1,m2", DistanceMeasure::red(), 0.25},
      {4, "m1,m3", DistanceMeasure::red(), 0.354},
  }};
  return cells;
}

// (d_J, difBetP over focal sets, RED) per case k = 1..20.
constexpr std::array<std::array<double, 3>, SweepSpec::kCases> kReferenceSweep = {{
    {0.7858, 0.605, 0.1871}, {0.6866, 0.426, 0.1340}, {0.5633, 0.248, 0.0882},
    {0.4286, 0.125, 0.0555}, {0.1322, 0.125, 0.0597}, {0.3883, 0.258, 0.0969},
    {0.5029, 0.355, 0.1349}, {0.5705, 0.425, 0.1682}, {0.6187, 0.480, 0.1980},
    {0.6553, 0.525, 0.2251}, {0.6844, 0.560, 0.2499}, {0.7081, 0.591, 0.2728},
    {0.7274, 0.617, 0.2943}, {0.7444, 0.639, 0.3144}, {0.7592, 0.658, 0.3333},
    {0.7658, 0.675, 0.3512}, {0.7839, 0.689, 0.3682}, {0.7944, 0.702, 0.3844},
    {0.8042, 0.714, 0.3999}, {0.8123, 0.725, 0.4147},
}};

bool within(double computed, double expected, double tolerance) {
  return std::abs(displayed(computed) - expected) <= tolerance + 1e-12;
}

Bba single_focal(const FramePtr& frame, std::initializer_list<int> members) {
  return Bba(frame, {{FocalSet::of(frame->size(), members), 1.0}});
}

}  // namespace

double displayed(double value) { return std::round(value * 1e4) / 1e4; }

FramePtr grade_frame() {
  static const FramePtr frame = build_frame({"Poor", "Low", "Middle", "High", "Perfect"});
  return frame;
}

EvidenceDocument example_document(int example) {
  const FramePtr frame = grade_frame();
  EvidenceDocument doc{frame, {}};
  switch (example) {
    case 1:
      doc.bbas = {{"m1", single_focal(frame, {1})},
                  {"m2", single_focal(frame, {2})},
                  {"m3", single_focal(frame, {5})}};
      break;
    case 2:
      doc.bbas = {{"m1", single_focal(frame, {1})},
                  {"m2", single_focal(frame, {2})},
                  {"m3", single_focal(frame, {3})}};
      break;
    case 3:
      doc.bbas = {{"m1", single_focal(frame, {1})},
                  {"m2", single_focal(frame, {2, 3})},
                  {"m3", single_focal(frame, {4, 5})}};
      break;
    case 4:
      doc.bbas = {{"m1", single_focal(frame, {1})},
                  {"m2", single_focal(frame, {1, 2})},
                  {"m3", single_focal(frame, {1, 3})}};
      break;
    default:
      throw ValidationError("no example " + std::to_string(example) + " (expected 1..4)");
  }
  return doc;
}

std::vector<ExampleCell> repro_examples() {
  std::vector<ExampleCell> out;
  for (const auto& cell : reference_examples()) {
    const EvidenceDocument doc = example_document(cell.example);
    const std::string pair = cell.pair;
    const auto comma = pair.find(',');
    const double computed =
        cell.measure(doc.bba(pair.substr(0, comma)), doc.bba(pair.substr(comma + 1)));
    out.push_back({cell.example, pair, cell.measure, computed, cell.value,
                   within(computed, cell.value, kExampleTolerance)});
  }
  return out;
}

FramePtr SweepSpec::frame() {
  static const FramePtr frame = numbered_frame(kFrameSize);
  return frame;
}

Bba SweepSpec::m1(int case_index) {
  if (case_index < 1 || case_index > kCases) {
    throw ValidationError("sweep case " + std::to_string(case_index) + " outside 1.." +
                          std::to_string(kCases));
  }
  constexpr int n = kFrameSize;
  // At k = 20 the moving subset is Theta itself and the two masses merge.
  return Bba(frame(), {{FocalSet::of(n, {2, 3, 4}), 0.05},
                       {FocalSet::singleton(n, 7), 0.05},
                       {FocalSet::range(n, 1, case_index), 0.8},
                       {FocalSet::whole(n), 0.1}});
}

Bba SweepSpec::m2() { return Bba(frame(), {{FocalSet::range(kFrameSize, 1, 5), 1.0}}); }

std::vector<SweepRow> repro_sweep() {
  const Bba reference = SweepSpec::m2();
  std::vector<std::future<SweepRow>> pending;
  pending.reserve(SweepSpec::kCases);
  for (int k = 1; k <= SweepSpec::kCases; ++k) {
    pending.push_back(std::async(std::launch::async, [k, &reference] {
      const Bba moving = SweepSpec::m1(k);
      const auto& expected = kReferenceSweep[k - 1];
      SweepRow row{k,
                   jousselme_distance(moving, reference),
                   dif_betp(moving, reference, BetPMode::kFocalSets),
                   red_distance(moving, reference),
                   expected[0],
                   expected[1],
                   expected[2],
                   false};
      row.match = within(row.jousselme, row.expected_jousselme, kSweepTolerance) &&
                  within(row.betp_focal, row.expected_betp_focal, kSweepTolerance) &&
                  within(row.red, row.expected_red, kSweepTolerance);
      return row;
    }));
  }
  std::vector<SweepRow> rows;
  rows.reserve(pending.size());
  for (auto& f : pending) rows.push_back(f.get());
  return rows;
}

}  // namespace evidence
