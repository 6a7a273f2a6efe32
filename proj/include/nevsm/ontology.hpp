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

#ifndef NEVSM_ONTOLOGY_HPP_
#define NEVSM_ONTOLOGY_HPP_

// Entity type hierarchy and knowledge base of known entities.
//
// The hierarchy is a forest: each type has at most one parent and several
// roots may coexist. Both structures are immutable once built and safe to
// share across threads.

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace nevsm {

struct TypeDecl {
  std::string id;
  std::optional<std::string> parent;
};

class TypeHierarchy {
 public:
  TypeHierarchy() = default;

  // Validates and freezes a list of declarations. Throws ValidationError
  // on duplicate ids, unknown parents, and cycles.
  static TypeHierarchy from_declarations(std::vector<TypeDecl> decls);

  std::size_t size() const { return decls_.size(); }
  bool contains(std::string_view type) const;

  // Declarations in input order.
  const std::vector<TypeDecl>& declarations() const { return decls_; }

  // True iff `super` is reachable from `sub` by zero or more parent steps.
  bool is_subtype(std::string_view sub, std::string_view super) const;

  // [t, parent(t), parent(parent(t)), ...] ending at a root.
  const std::vector<std::string>& supertypes_of(std::string_view type) const;

 private:
  std::size_t index_of(std::string_view type) const;

  std::vector<TypeDecl> decls_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<std::vector<std::string>> chains_;
};

struct EntityRecord {
  std::string id;
  std::string type;
  std::string name;
  // Sorted, unique, never contains `name`.
  std::vector<std::string> aliases;

  bool operator==(const EntityRecord&) const = default;
};

class KnowledgeBase {
 public:
  KnowledgeBase() = default;

  // Validates entity records against the hierarchy. Aliases equal to the
  // canonical name, and repeated aliases, are dropped.
  static KnowledgeBase build(TypeHierarchy hierarchy,
                             std::vector<EntityRecord> entities);

  const TypeHierarchy& hierarchy() const { return hierarchy_; }
  const std::map<std::string, EntityRecord, std::less<>>& entities() const {
    return entities_;
  }
  std::size_t entity_count() const { return entities_.size(); }

  const EntityRecord* find(std::string_view id) const;
  // Throws InvalidArgument for an unknown identifier.
  const EntityRecord& entity(std::string_view id) const;

  // Canonical name first, then aliases in sorted order.
  std::vector<std::string> names_of(std::string_view id) const;

  // Forwarders for the common hierarchy queries.
  bool is_subtype(std::string_view sub, std::string_view super) const {
    return hierarchy_.is_subtype(sub, super);
  }
  const std::vector<std::string>& supertypes_of(std::string_view type) const {
    return hierarchy_.supertypes_of(type);
  }

 private:
  TypeHierarchy hierarchy_;
  std::map<std::string, EntityRecord, std::less<>> entities_;
};

// KB file format: {"types":[{"id":..,"parent":..|null}],
//                  "entities":[{"id":..,"type":..,"name":..,"aliases":[..]}]}
KnowledgeBase parse_kb(const nlohmann::json& doc);
KnowledgeBase load_kb(std::istream& in);
KnowledgeBase load_kb_file(const std::string& path);
nlohmann::json kb_to_json(const KnowledgeBase& kb);

}  // namespace nevsm

#endif  // NEVSM_ONTOLOGY_HPP_
