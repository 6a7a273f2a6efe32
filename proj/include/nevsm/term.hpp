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

#ifndef NEVSM_TERM_HPP_
#define NEVSM_TERM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nevsm {

// The four NE feature spaces a document is vectorized over.
enum class FeatureSpace : std::uint8_t { Name, Type, NameType, Identifier };

inline constexpr std::array<FeatureSpace, 4> kFeatureSpaces = {
    FeatureSpace::Name, FeatureSpace::Type, FeatureSpace::NameType,
    FeatureSpace::Identifier};

inline constexpr std::size_t space_index(FeatureSpace s) {
  return static_cast<std::size_t>(s);
}

// "name", "type", "nametype", "identifier".
std::string_view to_string(FeatureSpace space);
// Throws InvalidArgument on anything else.
FeatureSpace parse_feature_space(std::string_view text);
// Comma-separated list, e.g. "type,identifier".
std::vector<FeatureSpace> parse_feature_spaces(std::string_view csv);

// A dimension of one feature space: a name, a type, an identifier, or a
// (name, type) pair. Terms order by space, then by serialized key.
class Term {
 public:
  static Term name(std::string name);
  static Term type(std::string type);
  static Term identifier(std::string id);
  static Term name_type(std::string_view name, std::string_view type);

  FeatureSpace space() const { return space_; }
  // Serialized form; pairs render as "name|type".
  const std::string& key() const { return key_; }
  // Whole key for single-component terms, the name for pairs.
  std::string_view first() const;
  // Type component of a pair; empty otherwise.
  std::string_view second() const;

  friend bool operator==(const Term& a, const Term& b) {
    return a.space_ == b.space_ && a.split_ == b.split_ && a.key_ == b.key_;
  }
  friend bool operator<(const Term& a, const Term& b) {
    if (a.space_ != b.space_) return a.space_ < b.space_;
    if (int c = a.key_.compare(b.key_); c != 0) return c < 0;
    return a.split_ < b.split_;
  }

 private:
  Term(FeatureSpace space, std::string key, std::size_t split);

  FeatureSpace space_ = FeatureSpace::Name;
  std::string key_;
  std::size_t split_ = std::string::npos;
};

// Occurrence multiset: term -> raw frequency in one document.
using TermCounts = std::map<Term, std::uint32_t>;

}  // namespace nevsm

#endif  // NEVSM_TERM_HPP_
