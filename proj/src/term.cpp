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

#include "nevsm/term.hpp"

#include <fmt/core.h>

#include "nevsm/error.hpp"

namespace nevsm {

std::string_view to_string(FeatureSpace space) {
  switch (space) {
    case FeatureSpace::Name: return "name";
    case FeatureSpace::Type: return "type";
    case FeatureSpace::NameType: return "nametype";
    case FeatureSpace::Identifier: return "identifier";
  }
  return "?";
}

FeatureSpace parse_feature_space(std::string_view text) {
  for (auto s : kFeatureSpaces)
    if (to_string(s) == text) return s;
  throw InvalidArgument(fmt::format(
      "unknown feature space '{}' (expected name|type|nametype|identifier)",
      text));
}

std::vector<FeatureSpace> parse_feature_spaces(std::string_view csv) {
  std::vector<FeatureSpace> out;
  std::size_t pos = 0;
  while (true) {
    auto comma = csv.find(',', pos);
    out.push_back(parse_feature_space(csv.substr(pos, comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

Term::Term(FeatureSpace space, std::string key, std::size_t split)
    : space_(space), key_(std::move(key)), split_(split) {
  if (key_.empty()) throw InvalidArgument("empty term key");
}

Term Term::name(std::string name) {
  return Term(FeatureSpace::Name, std::move(name), std::string::npos);
}

Term Term::type(std::string type) {
  return Term(FeatureSpace::Type, std::move(type), std::string::npos);
}

Term Term::identifier(std::string id) {
  return Term(FeatureSpace::Identifier, std::move(id), std::string::npos);
}

Term Term::name_type(std::string_view name, std::string_view type) {
  if (name.empty() || type.empty())
    throw InvalidArgument("name-type term needs both components");
  std::string key;
  key.reserve(name.size() + 1 + type.size());
  key.append(name).append("|").append(type);
  return Term(FeatureSpace::NameType, std::move(key), name.size());
}

std::string_view Term::first() const {
  std::string_view k = key_;
  return split_ == std::string::npos ? k : k.substr(0, split_);
}

std::string_view Term::second() const {
  std::string_view k = key_;
  return split_ == std::string::npos ? std::string_view{} : k.substr(split_ + 1);
}

}  // namespace nevsm
