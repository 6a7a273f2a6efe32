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
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "nevsm/error.hpp"
#include "nevsm/synthetic.hpp"

using namespace nevsm;

namespace {

std::string serialize(const SyntheticCorpus& s) {
  std::ostringstream out;
  out << kb_to_json(s.kb).dump() << '\n';
  write_corpus(out, s.corpus);
  return out.str();
}

std::string group_of(const std::string& entity_id) {
  // "#G<g>E<e>"
  return entity_id.substr(2, entity_id.find('E') - 2);
}

}  // namespace

TEST_CASE("one group without noise draws from one pool") {
  auto s = gen_synthetic({1, 8, 5, 0.0, 1});
  std::set<std::string> truths;
  for (const auto& d : s.corpus.documents) {
    truths.insert(*d.group_truth);
    for (const auto& a : d.annotations) CHECK(group_of(*a.entity_id) == "1");
  }
  CHECK(truths.size() == 1);
}

TEST_CASE("shape and reproducibility of the 3-group corpus") {
  const SyntheticParams p{3, 20, 10, 0.1, 7};
  auto a = gen_synthetic(p);
  auto b = gen_synthetic(p);
  REQUIRE(a.corpus.size() == 60);
  for (const auto& d : a.corpus.documents) CHECK(d.annotations.size() == 10);
  CHECK(serialize(a) == serialize(b));

  auto other = gen_synthetic({3, 20, 10, 0.1, 8});
  CHECK(serialize(a) != serialize(other));
}

TEST_CASE("noise mentions come from other groups in the planted proportion") {
  auto s = gen_synthetic({3, 20, 10, 0.1, 7});
  for (const auto& d : s.corpus.documents) {
    const auto own = d.group_truth->substr(std::string("Category").size());
    std::size_t foreign = 0;
    for (const auto& a : d.annotations)
      if (group_of(*a.entity_id) != own) ++foreign;
    CHECK(foreign == 1);
  }
}

TEST_CASE("type subtrees are disjoint per group") {
  SyntheticSchema schema;
  schema.subtypes_per_group = 3;
  auto s = gen_synthetic({4, 2, 3, 0.0, 2}, schema);
  CHECK(s.kb.hierarchy().size() == 4 * (1 + 3));
  for (const auto& [id, e] : s.kb.entities()) {
    const auto& chain = s.kb.supertypes_of(e.type);
    REQUIRE(chain.size() == 2);
    CHECK(chain.back() == "Category" + group_of(id));
  }
}

TEST_CASE("generated corpora validate against their KB") {
  auto s = gen_synthetic({3, 5, 4, 0.5, 99});
  std::ostringstream out;
  write_corpus(out, s.corpus);
  std::istringstream in(out.str());
  CHECK_NOTHROW(load_corpus(in, s.kb));
}

TEST_CASE("invalid generator parameters") {
  CHECK_THROWS_AS(gen_synthetic({0, 20, 10, 0.1, 7}), InvalidArgument);
  CHECK_THROWS_AS(gen_synthetic({3, 20, 10, 1.5, 7}), InvalidArgument);
  CHECK_THROWS_AS(gen_synthetic({3, 20, 10, -0.1, 7}), InvalidArgument);
  CHECK_THROWS_AS(gen_synthetic({3, 0, 10, 0.1, 7}), InvalidArgument);
  SyntheticSchema bad;
  bad.identities_per_group = 0;
  CHECK_THROWS_AS(gen_synthetic({3, 20, 10, 0.1, 7}, bad), InvalidArgument);
}
