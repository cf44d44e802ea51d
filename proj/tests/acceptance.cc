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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "evidence/cli.h"
#include "evidence/combination.h"
#include "evidence/distance.h"
#include "evidence/errors.h"
#include "evidence/pignistic.h"
#include "evidence/repro.h"
#include "test_support.h"

namespace evidence {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      detail << what;
      pass = false;
    }
  }
};

std::string fmt4(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

Bba single(const FramePtr& frame, std::initializer_list<int> members) {
  return build_bba(frame, {{FocalSet::of(frame->size(), members), 1.0}});
}

void near(Outcome& o, const std::string& label, double got, double want, double tol) {
  o.check(std::abs(got - want) <= tol, label + " = " + fmt4(got) + ", want " + fmt4(want));
}

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Strictly falls to a minimum (possibly a flat run of equal values), then
// strictly rises.
bool u_shaped(const std::vector<double>& v) {
  constexpr double kFlat = 1e-9;
  std::size_t lo = 0;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] < v[lo] - kFlat) lo = i;
  }
  std::size_t hi = lo;
  while (hi + 1 < v.size() && std::abs(v[hi + 1] - v[lo]) <= kFlat) ++hi;
  for (std::size_t i = 1; i <= lo; ++i) {
    if (!(v[i] < v[i - 1] - kFlat)) return false;
  }
  for (std::size_t i = hi + 1; i < v.size(); ++i) {
    if (!(v[i] > v[i - 1] + kFlat)) return false;
  }
  return true;
}

Outcome criterion_1() {
  Outcome o;
  const auto start = Clock::now();
  auto grades = grade_frame();
  const double d12 = red_distance(single(grades, {1}), single(grades, {2}));
  const double d13 = red_distance(single(grades, {1}), single(grades, {3}));
  const double ms = elapsed_ms(start);
  near(o, "RED(m1,m2)", d12, 0.5000, 5e-4);
  near(o, "RED(m1,m3)", d13, 0.7071, 5e-4);
  o.check(ms < 1.0, "runtime " + std::to_string(ms) + " ms");
  o.detail << (o.pass ? "" : "; ") << "values " << fmt4(d12) << ", " << fmt4(d13) << " in " << ms << " ms";
  return o;
}

Outcome criterion_2() {
  Outcome o;
  auto grades = grade_frame();
  near(o, "RED(m1,m2)", red_distance(single(grades, {1}), single(grades, {2, 3})), 0.5590, 5e-4);
  near(o, "RED(m1,m3)", red_distance(single(grades, {1}), single(grades, {4, 5})), 0.9014, 5e-4);
  return o;
}

Outcome criterion_3() {
  Outcome o;
  auto grades = grade_frame();
  near(o, "RED(m1,m2)", red_distance(single(grades, {1}), single(grades, {1, 2})), 0.2500, 5e-4);
  near(o, "RED(m1,m3)", red_distance(single(grades, {1}), single(grades, {1, 3})), 0.3536, 5e-4);
  return o;
}

Outcome criterion_4() {
  Outcome o;
  const auto cells = repro_examples();
  const double ppt_row[6] = {1, 1, 1, 1, 0.5, 0.5};
  int ppt_index = 0;
  int flagged = 0;
  for (const auto& c : cells) {
    const std::string label = "example " + std::to_string(c.example) + " " + c.pair + " " + c.measure.name();
    if (c.measure.kind == DistanceMeasure::Kind::kBettingCommitments) {
      near(o, label, c.computed, ppt_row[ppt_index++], 5e-4);
      o.check(c.match, label + " not marked match");
    } else if (c.measure.kind == DistanceMeasure::Kind::kJousselme) {
      if (c.example < 4) {
        near(o, label, c.computed, 1.0, 5e-4);
        o.check(c.match, label + " not marked match");
      } else {
        near(o, label, c.computed, 0.7071, 5e-4);
        o.check(!c.match, label + " discrepancy not flagged");
        flagged += c.match ? 0 : 1;
      }
    }
  }
  o.check(ppt_index == 6, "betting-commitment row incomplete");
  o.check(flagged == 2, "expected 2 flagged cells");
  if (o.pass) o.detail << "d_J example 4 = 0.7071 flagged against printed 1 (2 cells)";
  return o;
}

Outcome criterion_5() {
  Outcome o;
  const auto start = Clock::now();
  const auto rows = repro_sweep();
  const double ms = elapsed_ms(start);
  o.check(rows.size() == 20, "expected 20 sweep rows");
  std::vector<double> dj, dp, dr;
  for (const auto& r : rows) {
    const std::string k = "A={1.." + std::to_string(r.case_index) + "} ";
    near(o, k + "d_J", displayed(r.jousselme), r.expected_jousselme, 5e-3);
    near(o, k + "d_PPT_focal", displayed(r.betp_focal), r.expected_betp_focal, 5e-3);
    near(o, k + "d_RED", displayed(r.red), r.expected_red, 5e-3);
    dj.push_back(r.jousselme);
    dp.push_back(r.betp_focal);
    dr.push_back(r.red);
  }
  o.check(u_shaped(dj), "d_J column not U-shaped");
  o.check(u_shaped(dp), "d_PPT_focal column not U-shaped");
  o.check(u_shaped(dr), "d_RED column not U-shaped");
  const auto argmin = [](const std::vector<double>& v) {
    return static_cast<int>(std::min_element(v.begin(), v.end()) - v.begin()) + 1;
  };
  o.check(argmin(dj) == 5, "d_J minimum not at A={1..5}");
  o.check(argmin(dr) == 4, "d_RED minimum not at A={1..4}");
  o.check(ms < 1000.0, "runtime " + std::to_string(ms) + " ms");
  o.detail << (o.pass ? "" : "; ") << "sweep ran in " << ms << " ms";
  return o;
}

Outcome criterion_6() {
  Outcome o;
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::uniform_int(2, 50);
    auto frame = numbered_frame(n);
    const int i = testing::uniform_int(1, n);
    const int j = testing::uniform_int(1, n);
    const double got = red_distance(categorical_bba(frame, i), categorical_bba(frame, j));
    worst = std::max(worst, std::abs(got - std::sqrt(static_cast<double>(std::abs(i - j)) / (n - 1))));
  }
  auto grades = grade_frame();
  worst = std::max(worst, std::abs(red_distance(categorical_bba(grades, 1), categorical_bba(grades, 2)) - 0.5));
  worst = std::max(worst, std::abs(red_distance(categorical_bba(grades, 1), categorical_bba(grades, 3)) -
                                   std::sqrt(0.5)));
  o.check(worst <= 1e-12, "max error " + std::to_string(worst));
  o.detail << (o.pass ? "" : "; ") << "max error " << worst;
  return o;
}

Outcome criterion_7() {
  Outcome o;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    auto frame = numbered_frame(testing::uniform_int(1, 10));
    const auto [red, jousselme] = red_reduces_to_jousselme(testing::random_bba(frame), testing::random_bba(frame));
    worst = std::max(worst, std::abs(red - jousselme));
  }
  o.check(worst <= 1e-12, "max gap " + std::to_string(worst));
  o.detail << (o.pass ? "" : "; ") << "max gap " << worst;
  return o;
}

Outcome criterion_8() {
  Outcome o;
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    auto frame = numbered_frame(testing::uniform_int(1, 12));
    const Bba a = testing::random_bba(frame, 8);
    const Bba b = testing::random_bba(frame, 8);
    worst = std::max(worst, std::abs(dif_betp(a, b, BetPMode::kAllSubsets) - testing::brute_force_dif_betp(a, b)));
  }
  o.check(worst <= 1e-12, "max gap " + std::to_string(worst));
  o.detail << (o.pass ? "" : "; ") << "max gap " << worst;
  return o;
}

Outcome criterion_9() {
  Outcome o;
  const std::pair<DistanceMeasure, bool> measures[] = {
      {DistanceMeasure::red(), true},
      {DistanceMeasure::jousselme(), true},
      {DistanceMeasure::betting(BetPMode::kAllSubsets), false},
  };
  for (const auto& [measure, triangle] : measures) {
    int failures = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      auto frame = numbered_frame(testing::uniform_int(2, 20));
      const Bba a = testing::random_bba(frame);
      const Bba b = testing::random_bba(frame);
      const Bba c = testing::random_bba(frame);
      const double ab = measure(a, b);
      bool ok = std::abs(ab - measure(b, a)) <= 1e-12 && ab >= 0.0 && measure(a, a) == 0.0;
      if (triangle) ok = ok && measure(a, c) <= ab + measure(b, c) + 1e-9;
      failures += ok ? 0 : 1;
    }
    o.check(failures == 0, measure.name() + ": " + std::to_string(failures) + " failing trials");
  }
  auto grades = grade_frame();
  const Bba split = build_bba(grades, {{FocalSet::of(5, {1}), 0.5}, {FocalSet::of(5, {2}), 0.5}});
  o.check(red_distance(single(grades, {1, 2}), split) == 0.0, "RED({1,2} vs 0.5/0.5) != 0");
  return o;
}

Outcome criterion_10() {
  Outcome o;
  auto frame = numbered_frame(5);
  const Bba m1 = build_bba(frame, {{FocalSet::of(5, {1}), 0.6}, {FocalSet::of(5, {1, 2}), 0.4}});
  const Bba m2 = build_bba(frame, {{FocalSet::of(5, {1}), 0.5}, {FocalSet::of(5, {2}), 0.5}});
  near(o, "k", conflict(m1, m2).value(), 0.3, 1e-4);
  const Bba m = combine_dempster(m1, m2);
  near(o, "m({1})", m.mass_of(FocalSet::of(5, {1})), 0.7143, 1e-4);
  near(o, "m({2})", m.mass_of(FocalSet::of(5, {2})), 0.2857, 1e-4);

  int identity_failures = 0;
  int commutativity_failures = 0;
  for (int trial = 0; trial < 500; ++trial) {
    auto f = numbered_frame(testing::uniform_int(1, 12));
    const Bba a = testing::random_bba(f, 8);
    const Bba b = testing::random_bba(f, 8);
    const Bba v = combine_dempster(vacuous_bba(f), a);
    bool same = v.focal_elements().size() == a.focal_elements().size();
    for (std::size_t i = 0; same && i < a.focal_elements().size(); ++i) {
      same = v.focal_elements()[i].set == a.focal_elements()[i].set &&
             std::abs(v.focal_elements()[i].mass - a.focal_elements()[i].mass) <= 1e-12;
    }
    identity_failures += same ? 0 : 1;
    if (conflict(a, b).is_total()) continue;
    const Bba ab = combine_dempster(a, b);
    const Bba ba = combine_dempster(b, a);
    bool commutes = ab.focal_elements().size() == ba.focal_elements().size();
    for (std::size_t i = 0; commutes && i < ab.focal_elements().size(); ++i) {
      commutes = ab.focal_elements()[i].set == ba.focal_elements()[i].set &&
                 std::abs(ab.focal_elements()[i].mass - ba.focal_elements()[i].mass) <= 1e-12;
    }
    commutativity_failures += commutes ? 0 : 1;
  }
  o.check(identity_failures == 0, std::to_string(identity_failures) + " vacuous-identity failures");
  o.check(commutativity_failures == 0, std::to_string(commutativity_failures) + " commutativity failures");

  bool raised = false;
  try {
    combine_dempster(categorical_bba(frame, 1), categorical_bba(frame, 2));
  } catch (const TotalConflict&) {
    raised = true;
  }
  o.check(raised, "total conflict not raised");
  return o;
}

std::string capture(const std::string& command, int& status) {
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return {};
  }
  std::string out;
  char buffer[4096];
  std::size_t n;
  while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, n);
  status = pclose(pipe);
  return out;
}

Outcome criterion_11() {
  Outcome o;
  for (const std::string verb : {"examples", "sweep"}) {
    const std::string command = std::string(EVIDENCE_CLI_PATH) + " repro " + verb;
    int s1 = 0;
    int s2 = 0;
    const std::string first = capture(command, s1);
    const std::string second = capture(command, s2);
    o.check(s1 == 0 && s2 == 0, "repro " + verb + " exited nonzero");
    o.check(!first.empty() && first == second, "repro " + verb + " output differs between runs");
  }
  return o;
}

}  // namespace
}  // namespace evidence

int main(int argc, char** argv) {
  // Optional argument: run only criterion N (1-based).
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  using evidence::Outcome;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"AC1  categorical neighbours: RED 0.5000 / 0.7071, < 1 ms", evidence::criterion_1},
      {"AC2  split grades: RED 0.5590 / 0.9014", evidence::criterion_2},
      {"AC3  nested grades: RED 0.2500 / 0.3536", evidence::criterion_3},
      {"AC4  comparison table with discrepancy flags", evidence::criterion_4},
      {"AC5  growing-subset sweep within 5e-3, U-shape, < 1 s", evidence::criterion_5},
      {"AC6  singleton closed form sqrt(|i-j|/(N-1))", evidence::criterion_6},
      {"AC7  identity closeness reduces RED to Jousselme", evidence::criterion_7},
      {"AC8  total-variation identity for difBetP", evidence::criterion_8},
      {"AC9  metric axioms, 1000 trials per measure", evidence::criterion_9},
      {"AC10 Dempster combination oracle", evidence::criterion_10},
      {"AC11 repro output is byte-identical across runs", evidence::criterion_11},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "usage: acceptance [criterion 1.." << criteria.size() << "]\n";
    return 2;
  }
  int failed = 0;
  int ran = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i) + 1 != only) continue;
    const auto& [name, run] = criteria[i];
    ++ran;
    Outcome outcome;
    try {
      outcome = run();
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail << "exception: " << e.what();
    }
    const std::string detail = outcome.detail.str();
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << name << (detail.empty() ? "" : "  (" + detail + ")")
              << '\n';
    failed += outcome.pass ? 0 : 1;
  }
  std::cout << (ran - failed) << "/" << ran << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
