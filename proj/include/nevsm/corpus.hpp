// Copyright 2026 The nevsm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NEVSM_CORPUS_HPP_
#define NEVSM_CORPUS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "nevsm/ontology.hpp"

namespace nevsm {

// One recorded named-entity mention. Three forms are accepted: name only,
// name + type, name + type + identifier. After normalization an
// identifier always comes with its KB type.
struct Annotation {
  std::string name;
  std::optional<std::string> entity_type;
  std::optional<std::string> entity_id;

  bool operator==(const Annotation&) const = default;
};

// A document is a multiset of mentions: the annotation list keeps every
// occurrence, in order, including repeats.
struct Document {
  std::string doc_id;
  std::vector<Annotation> annotations;
  std::optional<std::string> group_truth;
  // Second-level planted label written by the synthetic generator.
  std::optional<std::string> identity_truth;

  bool operator==(const Document&) const = default;
};

struct Corpus {
  std::vector<Document> documents;

  std::size_t size() const { return documents.size(); }
  bool operator==(const Corpus&) const = default;
};

// Fills missing name/type from the KB when an identifier is present and
// checks the annotation against the KB. Throws ValidationError.
void normalize_annotation(Annotation& a, const KnowledgeBase& kb);

// Parses one JSON document object and normalizes its annotations.
Document parse_document(const nlohmann::json& obj, const KnowledgeBase& kb);

// JSON-Lines, one document per line; blank lines are skipped. Errors carry
// the 1-based line number.
Corpus load_corpus(std::istream& in, const KnowledgeBase& kb);
Corpus load_corpus_file(const std::string& path, const KnowledgeBase& kb);

nlohmann::json document_to_json(const Document& doc);
void write_corpus(std::ostream& out, const Corpus& corpus);

}  // namespace nevsm

#endif  // NEVSM_CORPUS_HPP_
