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

#include "nevsm/synthetic.hpp"

#include <cmath>
#include <string>
#include <vector>

#include <fmt/core.h>

#include "nevsm/error.hpp"
#include "nevsm/rng.hpp"

namespace nevsm {

namespace {

void check_params(const SyntheticParams& p, const SyntheticSchema& s) {
  if (p.groups == 0) throw InvalidArgument("groups must be positive");
  if (p.docs_per_group == 0)
    throw InvalidArgument("docs_per_group must be positive");
  if (p.mentions_per_doc == 0)
    throw InvalidArgument("mentions_per_doc must be positive");
  if (!(p.noise_rate >= 0.0 && p.noise_rate <= 1.0))
    throw InvalidArgument(
        fmt::format("noise_rate {} outside [0, 1]", p.noise_rate));
  if (s.subtypes_per_group == 0)
    throw InvalidArgument("subtypes_per_group must be positive");
  if (s.identities_per_group == 0)
    throw InvalidArgument("identities_per_group must be positive");
  if (!(s.focus_rate >= 0.0 && s.focus_rate <= 1.0))
    throw InvalidArgument(
        fmt::format("focus_rate {} outside [0, 1]", s.focus_rate));
}

}  // namespace

SyntheticCorpus gen_synthetic(const SyntheticParams& p,
                              const SyntheticSchema& s) {
  check_params(p, s);

  std::vector<TypeDecl> types;
  std::vector<EntityRecord> entities;
  // pools[g] lists entity ids of group g.
  std::vector<std::vector<std::string>> pools(p.groups);
  for (std::size_t g = 0; g < p.groups; ++g) {
    const auto root = fmt::format("Category{}", g + 1);
    types.push_back({root, std::nullopt});
    for (std::size_t k = 0; k < s.subtypes_per_group; ++k)
      types.push_back({fmt::format("{}Kind{}", root, k + 1), root});
    for (std::size_t e = 0; e < s.identities_per_group; ++e) {
      EntityRecord r;
      r.id = fmt::format("#G{}E{}", g + 1, e + 1);
      r.type = fmt::format("{}Kind{}", root, e % s.subtypes_per_group + 1);
      r.name = fmt::format("Entity{}_{}", g + 1, e + 1);
      for (std::size_t a = 0; a < s.aliases_per_entity; ++a)
        r.aliases.push_back(fmt::format("{}_alias{}", r.name, a + 1));
      pools[g].push_back(r.id);
      entities.push_back(std::move(r));
    }
  }
  SyntheticCorpus out{
      KnowledgeBase::build(TypeHierarchy::from_declarations(std::move(types)),
                           std::move(entities)),
      {}};

  SeededRng rng(p.seed);
  const std::size_t total = p.groups * p.docs_per_group;
  const auto noise_count = static_cast<std::size_t>(
      std::llround(p.noise_rate * static_cast<double>(p.mentions_per_doc)));
  const int width = static_cast<int>(std::to_string(total).size());

  out.corpus.documents.reserve(total);
  for (std::size_t d = 0; d < total; ++d) {
    // Groups are interleaved so document order carries no signal.
    const std::size_t g = d % p.groups;
    const std::size_t ordinal = d / p.groups;
    const std::string& focus = pools[g][ordinal % pools[g].size()];

    Document doc;
    doc.doc_id = fmt::format("doc-{:0{}}", d + 1, width);
    doc.group_truth = fmt::format("Category{}", g + 1);
    doc.identity_truth = focus;

    // Fisher-Yates over the noise flags.
    std::vector<char> noisy(p.mentions_per_doc, 0);
    for (std::size_t i = 0; i < noise_count; ++i) noisy[i] = 1;
    for (std::size_t i = noisy.size(); i > 1; --i)
      std::swap(noisy[i - 1], noisy[rng.index(i)]);

    for (std::size_t m = 0; m < p.mentions_per_doc; ++m) {
      const std::string* id;
      if (noisy[m] && p.groups > 1) {
        std::size_t other = rng.index(p.groups - 1);
        if (other >= g) ++other;
        id = &pools[other][rng.index(pools[other].size())];
      } else if (rng.unit() < s.focus_rate) {
        id = &focus;
      } else {
        id = &pools[g][rng.index(pools[g].size())];
      }
      const auto names = out.kb.names_of(*id);
      const auto& rec = out.kb.entity(*id);
      doc.annotations.push_back(
          {names[rng.index(names.size())], rec.type, rec.id});
    }
    out.corpus.documents.push_back(std::move(doc));
  }
  return out;
}

}  // namespace nevsm
