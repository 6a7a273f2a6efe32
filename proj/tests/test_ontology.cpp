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

#include <set>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "nevsm/error.hpp"
#include "nevsm/ontology.hpp"
#include "nevsm/rng.hpp"

using namespace nevsm;
using nevsm::testing::kb_from_text;
using nevsm::testing::sample_kb;

TEST_CASE("minimal KB loads") {
  auto kb = kb_from_text(R"({"types":[{"id":"Thing","parent":null}],"entities":[]})");
  CHECK(kb.hierarchy().size() == 1);
  CHECK(kb.entity_count() == 0);
}

TEST_CASE("sample KB loads with four types and two entities") {
  auto kb = sample_kb();
  CHECK(kb.hierarchy().size() == 4);
  CHECK(kb.entity_count() == 2);
}

TEST_CASE("KB validation errors name the offending record") {
  auto fails_with = [](const std::string& text, const std::string& needle) {
    try {
      kb_from_text(text);
    } catch (const ValidationError& e) {
      return std::string(e.what()).find(needle) != std::string::npos;
    }
    return false;
  };
  CHECK(fails_with(R"({"types":[{"id":"A","parent":"B"},{"id":"B","parent":"A"}],"entities":[]})",
                   "cycle"));
  CHECK(fails_with(R"({"types":[{"id":"A","parent":"A"}],"entities":[]})", "cycle"));
  CHECK(fails_with(R"({"types":[{"id":"A","parent":"Z"}],"entities":[]})", "unknown parent 'Z'"));
  CHECK(fails_with(R"({"types":[{"id":"A"},{"id":"A"}],"entities":[]})", "duplicate"));
  CHECK(fails_with(R"({"types":[{"id":"A"}],"entities":[
      {"id":"#1","type":"A","name":"x","aliases":[]},
      {"id":"#1","type":"A","name":"y","aliases":[]}]})",
                   "'#1': duplicate"));
  CHECK(fails_with(R"({"types":[{"id":"A"}],"entities":[{"id":"#1","type":"B","name":"x"}]})",
                   "unknown type 'B'"));
}

TEST_CASE("malformed KB text is a parse error") {
  CHECK_THROWS_AS(kb_from_text("{\"types\": ["), ParseError);
  CHECK_THROWS_AS(kb_from_text(R"({"types":[]})"), ParseError);
  CHECK_THROWS_AS(kb_from_text(R"({"types":[{"id":3}],"entities":[]})"), ParseError);
}

TEST_CASE("is_subtype") {
  auto kb = sample_kb();
  const auto& h = kb.hierarchy();
  CHECK(h.is_subtype("City", "City"));
  CHECK(h.is_subtype("City", "Location"));
  CHECK(h.is_subtype("City", "Thing"));
  CHECK_FALSE(h.is_subtype("Location", "City"));
  CHECK_FALSE(h.is_subtype("City", "Country"));
  CHECK_THROWS_AS(h.is_subtype("Town", "City"), InvalidArgument);
}

TEST_CASE("supertypes_of walks to the root") {
  auto kb = sample_kb();
  using V = std::vector<std::string>;
  CHECK(kb.supertypes_of("City") == V{"City", "Location", "Thing"});
  CHECK(kb.supertypes_of("Country") == V{"Country", "Location", "Thing"});
  CHECK(kb.supertypes_of("Thing") == V{"Thing"});
  CHECK_THROWS_AS(kb.supertypes_of("Town"), InvalidArgument);
}

TEST_CASE("names_of") {
  auto kb = sample_kb();
  using V = std::vector<std::string>;
  CHECK(kb.names_of("#C1") == V{"Gruzia", "Georgia"});
  CHECK(kb.names_of("#S1") == V{"Shenyang"});
  CHECK_THROWS_AS(kb.names_of("#X9"), InvalidArgument);
}

TEST_CASE("aliases are deduplicated and never repeat the canonical name") {
  auto kb = kb_from_text(R"({"types":[{"id":"T"}],"entities":[
      {"id":"#1","type":"T","name":"A","aliases":["B","A","B","C"]}]})");
  CHECK(kb.entity("#1").aliases == std::vector<std::string>{"B", "C"});
  CHECK(kb.names_of("#1") == std::vector<std::string>{"A", "B", "C"});
}

TEST_CASE("KB JSON round trip") {
  auto kb = sample_kb();
  auto again = parse_kb(kb_to_json(kb));
  CHECK(again.hierarchy().size() == kb.hierarchy().size());
  CHECK(again.entities() == kb.entities());
}

TEST_CASE("subsumption is a partial order matching the supertype chains") {
  // Exhaustive check on random forests of up to 20 types.
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    SeededRng rng(seed);
    const std::size_t n = 1 + rng.index(20);
    std::vector<TypeDecl> decls;
    for (std::size_t i = 0; i < n; ++i) {
      TypeDecl d{"T" + std::to_string(i), std::nullopt};
      if (i > 0 && rng.index(4) != 0) d.parent = "T" + std::to_string(rng.index(i));
      decls.push_back(d);
    }
    auto h = TypeHierarchy::from_declarations(decls);
    for (const auto& a : decls) {
      CHECK(h.is_subtype(a.id, a.id));
      const auto& chain = h.supertypes_of(a.id);
      CHECK(chain.front() == a.id);
      std::set<std::string> expected;
      for (const auto& b : decls) {
        if (h.is_subtype(a.id, b.id)) expected.insert(b.id);
        if (a.id != b.id && h.is_subtype(a.id, b.id)) CHECK_FALSE(h.is_subtype(b.id, a.id));
        for (const auto& c : decls)
          if (h.is_subtype(a.id, b.id) && h.is_subtype(b.id, c.id))
            CHECK(h.is_subtype(a.id, c.id));
      }
      CHECK(std::set<std::string>(chain.begin(), chain.end()) == expected);
      CHECK(chain.size() == expected.size());
    }
  }
}
