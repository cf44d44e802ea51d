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

#include "evidence/document.h"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "evidence/errors.h"

namespace evidence {

using Json = nlohmann::ordered_json;

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

FramePtr parse_frame(const Json& root) {
  if (!root.contains("frame")) throw ParseError("document has no 'frame' key");
  const Json& frame = root["frame"];
  if (!frame.is_array()) throw ParseError("'frame' must be an array of labels");
  std::vector<std::string> labels;
  for (const auto& label : frame) {
    if (!label.is_string()) throw ParseError("frame labels must be strings");
    labels.push_back(label.get<std::string>());
  }
  return build_frame(std::move(labels));
}

FocalSet parse_set(const Frame& frame, const Json& set) {
  if (!set.is_array()) throw ParseError("'set' must be an array of labels or indices");
  if (set.empty()) throw ValidationError("empty focal set");
  std::vector<int> members;
  for (const auto& item : set) {
    if (item.is_string()) {
      const auto label = item.get<std::string>();
      auto index = frame.index_of(label);
      if (!index) throw ValidationError("unknown element '" + label + "'");
      members.push_back(*index);
    } else if (item.is_number_integer()) {
      const auto index = item.get<std::int64_t>();
      if (index < 1 || index > frame.size()) {
        throw ValidationError("element index " + std::to_string(index) + " out of range 1.." +
                              std::to_string(frame.size()));
      }
      members.push_back(static_cast<int>(index));
    } else {
      throw ParseError("set members must be labels (strings) or 1-based indices (integers)");
    }
  }
  return FocalSet::of(frame.size(), members);
}

Bba parse_bba(const FramePtr& frame, const Json& entries, BbaOptions options) {
  if (!entries.is_array()) throw ParseError("a bba must be an array of {set, mass} entries");
  std::vector<FocalEntry> focal;
  for (const auto& entry : entries) {
    if (!entry.is_object() || !entry.contains("set") || !entry.contains("mass")) {
      throw ParseError("each bba entry needs 'set' and 'mass'");
    }
    for (const auto& [key, value] : entry.items()) {
      if (key != "set" && key != "mass") throw ParseError("unexpected key '" + key + "' in bba entry");
    }
    if (!entry["mass"].is_number()) throw ParseError("'mass' must be a number");
    focal.push_back({parse_set(*frame, entry["set"]), entry["mass"].get<double>()});
  }
  return Bba(frame, std::move(focal), options);
}

}  // namespace

const NamedBba& EvidenceDocument::named(std::string_view name) const {
  for (const auto& b : bbas) {
    if (b.name == name) return b;
  }
  throw ValidationError("document has no bba named '" + std::string(name) + "'");
}

const Bba& EvidenceDocument::bba(std::string_view name) const { return named(name).bba; }

bool operator==(const EvidenceDocument& a, const EvidenceDocument& b) {
  if (!same_frame(a.frame, b.frame) || a.bbas.size() != b.bbas.size()) return false;
  for (std::size_t i = 0; i < a.bbas.size(); ++i) {
    if (a.bbas[i].name != b.bbas[i].name || !(a.bbas[i].bba == b.bbas[i].bba)) return false;
  }
  return true;
}

EvidenceDocument parse_document(std::string_view text, BbaOptions options) {
  Json root;
  try {
    root = Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, column] = line_and_column(text, e.byte);
    throw ParseError("syntax error at line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + e.what(),
                     line, column);
  }
  if (!root.is_object()) throw ParseError("document must be an object with 'frame' and 'bbas'");
  for (const auto& [key, value] : root.items()) {
    if (key != "frame" && key != "bbas") throw ParseError("unexpected top-level key '" + key + "'");
  }

  EvidenceDocument doc;
  doc.frame = parse_frame(root);
  if (!root.contains("bbas")) throw ParseError("document has no 'bbas' key");
  const Json& bbas = root["bbas"];
  if (!bbas.is_object()) throw ParseError("'bbas' must map names to entry lists");
  for (const auto& [name, entries] : bbas.items()) {
    try {
      doc.bbas.push_back({name, parse_bba(doc.frame, entries, options)});
    } catch (const ParseError& e) {
      throw ParseError("bba '" + name + "': " + e.what(), e.line(), e.column());
    } catch (const ValidationError& e) {
      throw ValidationError("bba '" + name + "': " + e.what());
    }
  }
  return doc;
}

EvidenceDocument load_document(const std::filesystem::path& path, BbaOptions options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_document(buffer.str(), options);
}

std::string serialize_document(const EvidenceDocument& doc) {
  Json root;
  root["frame"] = doc.frame->labels();
  Json bbas = Json::object();
  for (const auto& [name, bba] : doc.bbas) {
    Json entries = Json::array();
    for (const auto& e : bba.focal_elements()) {
      Json set = Json::array();
      for (int m : e.set.members()) set.push_back(doc.frame->label(m));
      entries.push_back({{"set", std::move(set)}, {"mass", e.mass}});
    }
    bbas[name] = std::move(entries);
  }
  root["bbas"] = std::move(bbas);
  return root.dump(2) + "\n";
}

}  // namespace evidence
