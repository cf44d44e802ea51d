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

#include "evidence/cli.h"

#include <fmt/format.h>

#include <functional>

#include "CLI11.hpp"
#include "json.hpp"

#include "evidence/combination.h"
#include "evidence/document.h"
#include "evidence/errors.h"
#include "evidence/pignistic.h"
#include "evidence/ranking.h"
#include "evidence/repro.h"

namespace evidence {

using Json = nlohmann::ordered_json;

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) row += ',';
    row += csv_field(fields[i]);
  }
  row += '\n';
  return row;
}

std::string format_value(double value) {
  // Avoid printing "-0.0000".
  const double shown = displayed(value);
  return fmt::format("{:.4f}", shown == 0.0 ? 0.0 : shown);
}

namespace {

enum class Format { kCsv, kJson };

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct Settings {
  Format format = Format::kCsv;
  BbaOptions bba;
};

void emit_csv(std::ostream& out, const Table& table) {
  out << csv_row(table.header);
  for (const auto& row : table.rows) out << csv_row(row);
}

void emit_json(std::ostream& out, const Json& json) { out << json.dump(2) << '\n'; }

Json set_labels(const Frame& frame, const FocalSet& set) {
  Json labels = Json::array();
  for (int m : set.members()) labels.push_back(frame.label(m));
  return labels;
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> names;
  std::size_t start = 0;
  while (true) {
    const auto comma = list.find(',', start);
    names.push_back(list.substr(start, comma - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  for (const auto& n : names) {
    if (n.empty()) throw CLI::ValidationError("empty bba name in '" + list + "'");
  }
  return names;
}

void cmd_validate(const Settings& s, const std::string& file, std::ostream& out) {
  const EvidenceDocument doc = load_document(file, s.bba);
  if (s.format == Format::kJson) {
    Json bbas = Json::array();
    for (const auto& [name, bba] : doc.bbas) {
      double sum = 0.0;
      for (const auto& e : bba.focal_elements()) sum += e.mass;
      bbas.push_back({{"name", name},
                      {"focal_elements", bba.focal_elements().size()},
                      {"mass_sum", displayed(sum)}});
    }
    emit_json(out, {{"frame", doc.frame->labels()}, {"bbas", std::move(bbas)}, {"valid", true}});
    return;
  }
  Table table{{"bba", "focal_elements", "mass_sum"}, {}};
  for (const auto& [name, bba] : doc.bbas) {
    double sum = 0.0;
    for (const auto& e : bba.focal_elements()) sum += e.mass;
    table.rows.push_back({name, std::to_string(bba.focal_elements().size()), format_value(sum)});
  }
  emit_csv(out, table);
}

void cmd_combine(const Settings& s, const std::string& file, const std::string& names,
                 std::ostream& out) {
  const EvidenceDocument doc = load_document(file, s.bba);
  const auto selected = split_names(names);
  if (selected.size() < 2) throw CLI::ValidationError("--bbas needs at least two names");

  std::vector<double> conflicts;
  Bba acc = doc.bba(selected.front());
  for (std::size_t i = 1; i < selected.size(); ++i) {
    const Bba& next = doc.bba(selected[i]);
    conflicts.push_back(conflict(acc, next).value());
    acc = combine_dempster(acc, next);
  }

  if (s.format == Format::kJson) {
    Json result = Json::array();
    for (const auto& e : acc.focal_elements()) {
      result.push_back({{"set", set_labels(*doc.frame, e.set)}, {"mass", displayed(e.mass)}});
    }
    Json ks = Json::array();
    for (double k : conflicts) ks.push_back(displayed(k));
    emit_json(out, {{"bbas", selected}, {"conflicts", std::move(ks)}, {"result", std::move(result)}});
    return;
  }
  Table table{{"set", "mass"}, {}};
  for (const auto& e : acc.focal_elements()) {
    table.rows.push_back({format_set(*doc.frame, e.set), format_value(e.mass)});
  }
  emit_csv(out, table);
}

void cmd_ppt(const Settings& s, const std::string& file, const std::string& name, std::ostream& out) {
  const EvidenceDocument doc = load_document(file, s.bba);
  const PignisticDistribution p = ppt(doc.bba(name));
  if (s.format == Format::kJson) {
    Json probs = Json::array();
    for (int i = 1; i <= doc.frame->size(); ++i) {
      probs.push_back({{"element", doc.frame->label(i)}, {"probability", displayed(p.at(i))}});
    }
    emit_json(out, {{"bba", name}, {"ppt", std::move(probs)}});
    return;
  }
  Table table{{"element", "probability"}, {}};
  for (int i = 1; i <= doc.frame->size(); ++i) {
    table.rows.push_back({doc.frame->label(i), format_value(p.at(i))});
  }
  emit_csv(out, table);
}

void cmd_dist(const Settings& s, const std::string& file, const std::string& pair,
              const DistanceMeasure& measure, std::ostream& out) {
  const EvidenceDocument doc = load_document(file, s.bba);
  const auto names = split_names(pair);
  if (names.size() != 2) throw CLI::ValidationError("--pair takes exactly two names: a,b");
  const double d = measure(doc.bba(names[0]), doc.bba(names[1]));
  if (s.format == Format::kJson) {
    emit_json(out, {{"a", names[0]}, {"b", names[1]}, {"measure", measure.name()}, {"distance", displayed(d)}});
    return;
  }
  emit_csv(out, {{"a", "b", "measure", "distance"}, {{names[0], names[1], measure.name(), format_value(d)}}});
}

void cmd_rank(const Settings& s, const std::string& file, const std::string& reference,
              const DistanceMeasure& measure, std::ostream& out) {
  const EvidenceDocument doc = load_document(file, s.bba);
  const RankingResult ranking = rank_by_distance(doc.named(reference), doc.bbas, measure);
  if (s.format == Format::kJson) {
    Json entries = Json::array();
    for (const auto& e : ranking.entries) {
      entries.push_back({{"candidate", e.name}, {"distance", displayed(e.distance)}, {"rank", e.rank}, {"tied", e.tied}});
    }
    emit_json(out, {{"reference", ranking.reference}, {"measure", measure.name()}, {"ranking", std::move(entries)}});
    return;
  }
  Table table{{"candidate", "distance", "rank", "tied"}, {}};
  for (const auto& e : ranking.entries) {
    table.rows.push_back({e.name, format_value(e.distance), std::to_string(e.rank), e.tied ? "true" : "false"});
  }
  emit_csv(out, table);
}

void cmd_repro_examples(const Settings& s, std::ostream& out) {
  const auto cells = repro_examples();
  if (s.format == Format::kJson) {
    Json rows = Json::array();
    for (const auto& c : cells) {
      const auto comma = c.pair.find(',');
      rows.push_back({{"example", c.example},
                      {"a", c.pair.substr(0, comma)},
                      {"b", c.pair.substr(comma + 1)},
                      {"measure", c.measure.name()},
                      {"computed", displayed(c.computed)},
                      {"expected", displayed(c.expected)},
                      {"match", c.match}});
    }
    emit_json(out, rows);
    return;
  }
  Table table{{"example", "a", "b", "measure", "computed", "expected", "match"}, {}};
  for (const auto& c : cells) {
    const auto comma = c.pair.find(',');
    table.rows.push_back({std::to_string(c.example), c.pair.substr(0, comma), c.pair.substr(comma + 1),
                          c.measure.name(), format_value(c.computed), format_value(c.expected),
                          c.match ? "true" : "false"});
  }
  emit_csv(out, table);
}

void cmd_repro_sweep(const Settings& s, std::ostream& out) {
  const auto rows = repro_sweep();
  if (s.format == Format::kJson) {
    Json json = Json::array();
    for (const auto& r : rows) {
      json.push_back({{"case", r.case_index},
                      {"d_J", displayed(r.jousselme)},
                      {"d_PPT_focal", displayed(r.betp_focal)},
                      {"d_RED", displayed(r.red)},
                      {"ref_d_J", r.expected_jousselme},
                      {"ref_d_PPT_focal", r.expected_betp_focal},
                      {"ref_d_RED", r.expected_red},
                      {"match", r.match}});
    }
    emit_json(out, json);
    return;
  }
  Table table{{"case", "d_J", "d_PPT_focal", "d_RED", "ref_d_J", "ref_d_PPT_focal", "ref_d_RED", "match"}, {}};
  for (const auto& r : rows) {
    table.rows.push_back({std::to_string(r.case_index), format_value(r.jousselme), format_value(r.betp_focal),
                          format_value(r.red), format_value(r.expected_jousselme),
                          format_value(r.expected_betp_focal), format_value(r.expected_red),
                          r.match ? "true" : "false"});
  }
  emit_csv(out, table);
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evidence distances and ranking for ordered frames of discernment", "evidence"};
  app.fallthrough();
  app.require_subcommand(1);

  Settings settings;
  std::string format = "csv";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--renormalize", settings.bba.renormalize, "Rescale masses that do not sum to 1");

  std::string file;
  std::string names;
  std::string measure_text = "red";
  const auto measure_check = CLI::Validator(
      [](std::string& text) -> std::string {
        try {
          DistanceMeasure::parse(text);
          return {};
        } catch (const ValidationError& e) {
          return e.what();
        }
      },
      "MEASURE");

  std::function<void()> action;

  auto* validate = app.add_subcommand("validate", "Check an evidence document");
  validate->add_option("file", file, "Evidence document")->required();
  validate->callback([&] { action = [&] { cmd_validate(settings, file, out); }; });

  auto* combine = app.add_subcommand("combine", "Dempster combination of named BBAs");
  combine->add_option("file", file, "Evidence document")->required();
  combine->add_option("--bbas", names, "Comma-separated BBA names, combined left to right")->required();
  combine->callback([&] { action = [&] { cmd_combine(settings, file, names, out); }; });

  auto* pignistic = app.add_subcommand("ppt", "Pignistic probabilities of a BBA");
  pignistic->add_option("file", file, "Evidence document")->required();
  pignistic->add_option("--bba", names, "BBA name")->required();
  pignistic->callback([&] { action = [&] { cmd_ppt(settings, file, names, out); }; });

  auto* dist = app.add_subcommand("dist", "Distance between two BBAs");
  dist->add_option("file", file, "Evidence document")->required();
  dist->add_option("--pair", names, "Two BBA names: a,b")->required();
  dist->add_option("--measure", measure_text, "red | jousselme | betp[:all|singleton|focal]")
      ->check(measure_check);
  dist->callback([&] {
    action = [&] { cmd_dist(settings, file, names, DistanceMeasure::parse(measure_text), out); };
  });

  auto* rank = app.add_subcommand("rank", "Rank every BBA of a document by distance to a reference");
  rank->add_option("file", file, "Evidence document")->required();
  rank->add_option("--reference", names, "Reference BBA name")->required();
  rank->add_option("--measure", measure_text, "red | jousselme | betp[:all|singleton|focal]")
      ->check(measure_check);
  rank->callback([&] {
    action = [&] { cmd_rank(settings, file, names, DistanceMeasure::parse(measure_text), out); };
  });

  auto* repro = app.add_subcommand("repro", "Recompute the reference comparison tables");
  repro->require_subcommand(1);
  repro->add_subcommand("examples", "Distance table for the categorical examples")
      ->callback([&] { action = [&] { cmd_repro_examples(settings, out); }; });
  repro->add_subcommand("sweep", "Growing-subset benchmark")
      ->callback([&] { action = [&] { cmd_repro_sweep(settings, out); }; });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  settings.format = format == "json" ? Format::kJson : Format::kCsv;

  try {
    action();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const FrameMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitOk;
}

}  // namespace evidence
