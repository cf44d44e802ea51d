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

#ifndef EVIDENCE_REPRO_H_
#define EVIDENCE_REPRO_H_

#include <string>
#include <vector>

#include "evidence/distance.h"
#include "evidence/document.h"

namespace evidence {

// Reported values are compared after rounding to 4 decimals.
inline constexpr double kExampleTolerance = 5e-4;
inline constexpr double kSweepTolerance = 5e-3;

// Round to the 4 decimals used for display.
double displayed(double value);

// Categorical comparison fixtures on the five-grade frame
// {Poor, Low, Middle, High, Perfect}. `example` is 1..4.
EvidenceDocument example_document(int example);

// Five-grade frame shared by the examples.
FramePtr grade_frame();

struct ExampleCell {
  int example;
  std::string pair;  // "m1,m2"
  DistanceMeasure measure;
  double computed;
  double expected;  // reference value
  bool match;       // |displayed(computed) - expected| <= kExampleTolerance
};

// Every cell of the comparison table (three measures x examples 2..4 x two
// pairs), in table order.
std::vector<ExampleCell> repro_examples();

// Growing-subset benchmark on the frame {1..20}:
//   m1: {2,3,4} -> 0.05, {7} -> 0.05, A -> 0.8, Theta -> 0.1
//   m2: {1,...,5} -> 1
// with A = {1..k} for case k.
struct SweepSpec {
  static constexpr int kFrameSize = 20;
  static constexpr int kCases = 20;

  static Bba m1(int case_index);
  static Bba m2();
  static FramePtr frame();
};

struct SweepRow {
  int case_index;  // k, for A = {1..k}
  double jousselme;
  double betp_focal;
  double red;
  double expected_jousselme;
  double expected_betp_focal;
  double expected_red;
  bool match;  // all three within kSweepTolerance after display rounding
};

// Cases are evaluated concurrently; rows come back in case order.
std::vector<SweepRow> repro_sweep();

}  // namespace evidence

#endif  // EVIDENCE_REPRO_H_
