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

#ifndef NEVSM_SYNTHETIC_HPP_
#define NEVSM_SYNTHETIC_HPP_

// Synthetic NE-annotated corpora with planted two-level structure.
//
// Group g owns a disjoint type subtree: a root "Category<g>" with
// `subtypes_per_group` children "Category<g>Kind<s>", and a pool of
// `identities_per_group` entities spread over those subtypes. Every
// document belongs to one group and is "about" one entity of that group
// (its focus). Of its mentions, round(noise_rate * mentions_per_doc) come
// from other groups' pools; the rest come from its own pool, picking the
// focus entity with probability `focus_rate` and a uniform pool member
// otherwise. Surface names are drawn uniformly from the entity's names.
//
// group_truth holds the group's root type, identity_truth the focus id.

#include <cstddef>
#include <cstdint>

#include "nevsm/corpus.hpp"
#include "nevsm/ontology.hpp"

namespace nevsm {

struct SyntheticParams {
  std::size_t groups = 3;
  std::size_t docs_per_group = 20;
  std::size_t mentions_per_doc = 10;
  double noise_rate = 0.1;
  std::uint64_t seed = 7;
};

struct SyntheticSchema {
  std::size_t subtypes_per_group = 1;
  std::size_t identities_per_group = 4;
  std::size_t aliases_per_entity = 1;
  double focus_rate = 0.5;
};

struct SyntheticCorpus {
  KnowledgeBase kb;
  Corpus corpus;
};

// Pure function of its arguments. Throws InvalidArgument for zero counts
// or rates outside [0, 1].
SyntheticCorpus gen_synthetic(const SyntheticParams& params,
                              const SyntheticSchema& schema = {});

}  // namespace nevsm

#endif  // NEVSM_SYNTHETIC_HPP_
