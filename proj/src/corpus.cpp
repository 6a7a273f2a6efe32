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

#include "nevsm/corpus.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <set>

#include <fmt/core.h>

#include "nevsm/error.hpp"

namespace nevsm {

using nlohmann::json;

void normalize_annotation(Annotation& a, const KnowledgeBase& kb) {
  if (a.entity_id) {
    const EntityRecord* e = kb.find(*a.entity_id);
    if (e == nullptr)
      throw ValidationError(
          fmt::format("unknown entity_id '{}'", *a.entity_id));
    if (a.entity_type && *a.entity_type != e->type)
      throw ValidationError(fmt::format(
          "entity_id '{}' has type '{}' in the KB but annotation says '{}' "
          "(mismatch)",
          e->id, e->type, *a.entity_type));
    if (!a.entity_type) a.entity_type = e->type;
    if (a.name.empty()) a.name = e->name;
  }
  if (a.name.empty()) throw ValidationError("annotation without a name");
  if (a.entity_type && !kb.hierarchy().contains(*a.entity_type))
    throw ValidationError(
        fmt::format("unknown entity_type '{}'", *a.entity_type));
}

namespace {

std::optional<std::string> optional_string(const json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  if (!it->is_string())
    throw ParseError(fmt::format("field '{}' must be a string", key));
  return it->get<std::string>();
}

}  // namespace

Document parse_document(const json& obj, const KnowledgeBase& kb) {
  if (!obj.is_object()) throw ParseError("document must be a JSON object");
  Document doc;
  auto id = optional_string(obj, "doc_id");
  if (!id || id->empty()) throw ParseError("missing or empty 'doc_id'");
  doc.doc_id = std::move(*id);
  doc.group_truth = optional_string(obj, "group_truth");
  doc.identity_truth = optional_string(obj, "identity_truth");

  auto anns = obj.find("annotations");
  if (anns == obj.end() || !anns->is_array())
    throw ParseError(
        fmt::format("document '{}': 'annotations' must be an array", doc.doc_id));
  for (std::size_t i = 0; i < anns->size(); ++i) {
    const auto& a = (*anns)[i];
    if (!a.is_object())
      throw ParseError(fmt::format("document '{}': annotation {} must be an object",
                                   doc.doc_id, i));
    Annotation ann;
    try {
      ann.name = optional_string(a, "name").value_or("");
      ann.entity_type = optional_string(a, "type");
      ann.entity_id = optional_string(a, "entity_id");
      normalize_annotation(ann, kb);
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("document '{}', annotation {}: {}",
                                   doc.doc_id, i, e.what()));
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("document '{}', annotation {}: {}",
                                        doc.doc_id, i, e.what()));
    }
    doc.annotations.push_back(std::move(ann));
  }
  return doc;
}

Corpus load_corpus(std::istream& in, const KnowledgeBase& kb) {
  Corpus corpus;
  std::set<std::string, std::less<>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json obj;
      try {
        obj = json::parse(line);
      } catch (const json::parse_error& e) {
        throw ParseError(e.what());
      }
      Document doc = parse_document(obj, kb);
      if (!seen.insert(doc.doc_id).second)
        throw ValidationError(
            fmt::format("duplicate doc_id '{}'", doc.doc_id));
      corpus.documents.push_back(std::move(doc));
    } catch (const ParseError& e) {
      throw ParseError(fmt::format("line {}: {}", lineno, e.what()));
    } catch (const ValidationError& e) {
      throw ValidationError(fmt::format("line {}: {}", lineno, e.what()));
    }
  }
  return corpus;
}

Corpus load_corpus_file(const std::string& path, const KnowledgeBase& kb) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  return load_corpus(in, kb);
}

json document_to_json(const Document& doc) {
  json anns = json::array();
  for (const auto& a : doc.annotations) {
    json j = json::object();
    j["name"] = a.name;
    if (a.entity_type) j["type"] = *a.entity_type;
    if (a.entity_id) j["entity_id"] = *a.entity_id;
    anns.push_back(std::move(j));
  }
  json out = json::object();
  out["doc_id"] = doc.doc_id;
  out["annotations"] = std::move(anns);
  if (doc.group_truth) out["group_truth"] = *doc.group_truth;
  if (doc.identity_truth) out["identity_truth"] = *doc.identity_truth;
  return out;
}

void write_corpus(std::ostream& out, const Corpus& corpus) {
  for (const auto& d : corpus.documents) out << document_to_json(d).dump() << '\n';
}

}  // namespace nevsm
