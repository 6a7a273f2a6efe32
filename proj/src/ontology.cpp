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

#include "nevsm/ontology.hpp"

#include <algorithm>
#include <fstream>
#include <istream>

#include <fmt/core.h>

#include "nevsm/error.hpp"

namespace nevsm {

using nlohmann::json;

TypeHierarchy TypeHierarchy::from_declarations(std::vector<TypeDecl> decls) {
  TypeHierarchy h;
  h.decls_ = std::move(decls);
  for (std::size_t i = 0; i < h.decls_.size(); ++i) {
    const auto& id = h.decls_[i].id;
    if (id.empty()) throw ValidationError("type with empty id");
    if (!h.index_.emplace(id, i).second)
      throw ValidationError(fmt::format("type '{}': duplicate identifier", id));
  }
  for (const auto& d : h.decls_) {
    if (d.parent && !h.index_.contains(*d.parent))
      throw ValidationError(
          fmt::format("type '{}': unknown parent '{}'", d.id, *d.parent));
  }

  // 0 = unvisited, 1 = on the current walk, 2 = known acyclic.
  std::vector<int> state(h.decls_.size(), 0);
  for (std::size_t start = 0; start < h.decls_.size(); ++start) {
    std::vector<std::size_t> walk;
    std::size_t cur = start;
    bool looped = false;
    while (state[cur] != 2) {
      if (state[cur] == 1) {
        looped = true;
        break;
      }
      state[cur] = 1;
      walk.push_back(cur);
      const auto& parent = h.decls_[cur].parent;
      if (!parent) break;
      cur = h.index_.find(*parent)->second;
    }
    if (looped) {
      std::string path;
      for (auto it = std::find(walk.begin(), walk.end(), cur); it != walk.end();
           ++it)
        path += h.decls_[*it].id + " -> ";
      path += h.decls_[cur].id;
      throw ValidationError(fmt::format(
          "type '{}': cycle in parent relation ({})", h.decls_[cur].id, path));
    }
    for (auto n : walk) state[n] = 2;
  }

  h.chains_.resize(h.decls_.size());
  for (std::size_t i = 0; i < h.decls_.size(); ++i) {
    auto& chain = h.chains_[i];
    const TypeDecl* d = &h.decls_[i];
    chain.push_back(d->id);
    while (d->parent) {
      d = &h.decls_[h.index_.find(*d->parent)->second];
      chain.push_back(d->id);
    }
  }
  return h;
}

bool TypeHierarchy::contains(std::string_view type) const {
  return index_.find(type) != index_.end();
}

std::size_t TypeHierarchy::index_of(std::string_view type) const {
  auto it = index_.find(type);
  if (it == index_.end())
    throw InvalidArgument(fmt::format("unknown type '{}'", type));
  return it->second;
}

bool TypeHierarchy::is_subtype(std::string_view sub,
                               std::string_view super) const {
  index_of(super);
  const auto& chain = chains_[index_of(sub)];
  return std::find(chain.begin(), chain.end(), super) != chain.end();
}

const std::vector<std::string>& TypeHierarchy::supertypes_of(
    std::string_view type) const {
  return chains_[index_of(type)];
}

KnowledgeBase KnowledgeBase::build(TypeHierarchy hierarchy,
                                   std::vector<EntityRecord> entities) {
  KnowledgeBase kb;
  kb.hierarchy_ = std::move(hierarchy);
  for (auto& e : entities) {
    if (e.id.empty()) throw ValidationError("entity with empty id");
    if (e.name.empty())
      throw ValidationError(fmt::format("entity '{}': empty name", e.id));
    if (!kb.hierarchy_.contains(e.type))
      throw ValidationError(
          fmt::format("entity '{}': unknown type '{}'", e.id, e.type));
    std::erase_if(e.aliases, [&](const std::string& a) {
      return a.empty() || a == e.name;
    });
    std::sort(e.aliases.begin(), e.aliases.end());
    e.aliases.erase(std::unique(e.aliases.begin(), e.aliases.end()),
                    e.aliases.end());
    std::string id = e.id;
    if (!kb.entities_.emplace(id, std::move(e)).second)
      throw ValidationError(
          fmt::format("entity '{}': duplicate identifier", id));
  }
  return kb;
}

const EntityRecord* KnowledgeBase::find(std::string_view id) const {
  auto it = entities_.find(id);
  return it == entities_.end() ? nullptr : &it->second;
}

const EntityRecord& KnowledgeBase::entity(std::string_view id) const {
  if (const auto* e = find(id)) return *e;
  throw InvalidArgument(fmt::format("unknown entity identifier '{}'", id));
}

std::vector<std::string> KnowledgeBase::names_of(std::string_view id) const {
  const auto& e = entity(id);
  std::vector<std::string> names;
  names.reserve(1 + e.aliases.size());
  names.push_back(e.name);
  names.insert(names.end(), e.aliases.begin(), e.aliases.end());
  return names;
}

namespace {

const json& require(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(fmt::format("{}: missing field '{}'", where, key));
  return *it;
}

std::string require_string(const json& obj, const char* key,
                           const std::string& where) {
  const auto& v = require(obj, key, where);
  if (!v.is_string())
    throw ParseError(fmt::format("{}: field '{}' must be a string", where, key));
  return v.get<std::string>();
}

}  // namespace

KnowledgeBase parse_kb(const json& doc) {
  if (!doc.is_object()) throw ParseError("KB: top level must be an object");
  const auto& types = require(doc, "types", "KB");
  const auto& entities = require(doc, "entities", "KB");
  if (!types.is_array()) throw ParseError("KB: 'types' must be an array");
  if (!entities.is_array()) throw ParseError("KB: 'entities' must be an array");

  std::vector<TypeDecl> decls;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& t = types[i];
    const auto where = fmt::format("types[{}]", i);
    if (!t.is_object()) throw ParseError(where + ": must be an object");
    TypeDecl d{require_string(t, "id", where), std::nullopt};
    if (auto p = t.find("parent"); p != t.end() && !p->is_null()) {
      if (!p->is_string())
        throw ParseError(where + ": 'parent' must be a string or null");
      d.parent = p->get<std::string>();
    }
    decls.push_back(std::move(d));
  }

  std::vector<EntityRecord> records;
  for (std::size_t i = 0; i < entities.size(); ++i) {
    const auto& e = entities[i];
    const auto where = fmt::format("entities[{}]", i);
    if (!e.is_object()) throw ParseError(where + ": must be an object");
    EntityRecord r{require_string(e, "id", where),
                   require_string(e, "type", where),
                   require_string(e, "name", where),
                   {}};
    if (auto a = e.find("aliases"); a != e.end() && !a->is_null()) {
      if (!a->is_array()) throw ParseError(where + ": 'aliases' must be an array");
      for (const auto& alias : *a) {
        if (!alias.is_string())
          throw ParseError(where + ": aliases must be strings");
        r.aliases.push_back(alias.get<std::string>());
      }
    }
    records.push_back(std::move(r));
  }
  return KnowledgeBase::build(TypeHierarchy::from_declarations(std::move(decls)),
                              std::move(records));
}

KnowledgeBase load_kb(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(fmt::format("KB: {}", e.what()));
  }
  return parse_kb(doc);
}

KnowledgeBase load_kb_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot open '{}'", path));
  return load_kb(in);
}

json kb_to_json(const KnowledgeBase& kb) {
  json types = json::array();
  for (const auto& d : kb.hierarchy().declarations()) {
    json t = json::object();
    t["id"] = d.id;
    t["parent"] = d.parent ? json(*d.parent) : json(nullptr);
    types.push_back(std::move(t));
  }
  json entities = json::array();
  for (const auto& [id, e] : kb.entities()) {
    json j = json::object();
    j["id"] = e.id;
    j["type"] = e.type;
    j["name"] = e.name;
    j["aliases"] = e.aliases;
    entities.push_back(std::move(j));
  }
  json out = json::object();
  out["types"] = std::move(types);
  out["entities"] = std::move(entities);
  return out;
}

}  // namespace nevsm
