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

#ifndef EVIDENCE_DOCUMENT_H_
#define EVIDENCE_DOCUMENT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "evidence/bba.h"
#include "evidence/ranking.h"

namespace evidence {

// A frame plus named BBAs, in document order. The on-disk form is JSON:
//
//   {
//     "frame": ["Poor", "Low", "Middle", "High", "Perfect"],
//     "bbas": {
//       "m1": [ {"set": ["Poor"], "mass": 0.6}, {"set": [1, 2], "mass": 0.4} ]
//     }
//   }
//
// Set members are labels (strings) or 1-based indices (integers).
struct EvidenceDocument {
  FramePtr frame;
  std::vector<NamedBba> bbas;

  // Throws ValidationError naming the missing BBA.
  const Bba& bba(std::string_view name) const;
  const NamedBba& named(std::string_view name) const;

  friend bool operator==(const EvidenceDocument& a, const EvidenceDocument& b);
};

// Throws ParseError (syntax and schema problems, with line and column when the
// JSON itself is malformed) or ValidationError (frame or mass problems, with the
// offending BBA named in the message).
EvidenceDocument parse_document(std::string_view text, BbaOptions options = {});

EvidenceDocument load_document(const std::filesystem::path& path, BbaOptions options = {});

// Sets are written as label lists; masses use shortest round-trip form.
std::string serialize_document(const EvidenceDocument& doc);

}  // namespace evidence

#endif  // EVIDENCE_DOCUMENT_H_
