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

#include "nevsm/hierarchy.hpp"

#include <algorithm>
#include <map>

#include <fmt/core.h>

#include "nevsm/error.hpp"
#include "nevsm/kmeans.hpp"
#include "nevsm/vsm.hpp"

namespace nevsm {

namespace {

void check_config(std::span<const PhaseConfig> phases, const ClusterConfig& cfg) {
  if (phases.empty()) throw InvalidArgument("at least one phase is required");
  for (const auto& p : phases)
    if (p.k && *p.k == 0) throw InvalidArgument("k must be positive");
  if (!(cfg.alpha >= 0.0 && cfg.alpha <= 1.0))
    throw InvalidArgument(fmt::format("alpha = {} outside [0, 1]", cfg.alpha));
  if (!(cfg.tc_fraction >= 0.0 && cfg.tc_fraction <= 1.0))
    throw InvalidArgument(
        fmt::format("tc_fraction = {} outside [0, 1]", cfg.tc_fraction));
  if (cfg.restarts == 0) throw InvalidArgument("restarts must be positive");
  if (cfg.max_iterations == 0)
    throw InvalidArgument("max_iterations must be positive");
  if (cfg.min_split_size == 0)
    throw InvalidArgument("min_split_size must be positive");
  if (cfg.auto_k_cap < 2) throw InvalidArgument("auto k cap must be at least 2");
}

void collect_leaves(ClusterNode& node, std::vector<ClusterNode*>& out) {
  if (node.is_leaf()) {
    out.push_back(&node);
    return;
  }
  for (auto& c : node.children) collect_leaves(c, out);
}

// Lazily built per-space occurrence counts and corpus-wide models.
class SpaceCache {
 public:
  SpaceCache(const Corpus& corpus, const KnowledgeBase& kb)
      : corpus_(corpus), kb_(kb) {}

  const std::vector<TermCounts>& counts(FeatureSpace s) {
    auto it = counts_.find(s);
    if (it == counts_.end())
      it = counts_.emplace(s, count_terms(corpus_, s, kb_)).first;
    return it->second;
  }

  const SpaceModel& global(FeatureSpace s) {
    auto it = models_.find(s);
    if (it == models_.end())
      it = models_.emplace(s, build_space_model(s, counts(s))).first;
    return it->second;
  }

 private:
  const Corpus& corpus_;
  const KnowledgeBase& kb_;
  std::map<FeatureSpace, std::vector<TermCounts>> counts_;
  std::map<FeatureSpace, SpaceModel> models_;
};

}  // namespace

HierarchyResult hierarchical_cluster(const Corpus& corpus,
                                     const KnowledgeBase& kb,
                                     std::span<const PhaseConfig> phases,
                                     const ClusterConfig& cfg) {
  check_config(phases, cfg);
  if (corpus.size() == 0) throw InvalidArgument("empty corpus");

  HierarchyResult result;
  result.root.cluster_id = "root";
  result.root.docs.resize(corpus.size());
  for (std::size_t d = 0; d < corpus.size(); ++d) result.root.docs[d] = d;

  SpaceCache cache(corpus, kb);
  for (const auto& phase : phases) {
    const FeatureSpace space = phase.space;
    const SpaceModel& global = cache.global(space);

    std::vector<LabelSet> labels(corpus.size());
    for (std::size_t d = 0; d < corpus.size(); ++d)
      labels[d] = doc_label(global.vectors[d], global.index, cfg.tc_fraction);

    PhaseResult pr;
    pr.space = space;

    std::vector<ClusterNode*> frontier;
    collect_leaves(result.root, frontier);
    for (ClusterNode* node : frontier) {
      const std::size_t n = node->docs.size();
      if (n < cfg.min_split_size) continue;

      std::vector<SparseVector> vectors;
      std::vector<LabelSet> node_labels;
      vectors.reserve(n);
      node_labels.reserve(n);
      if (cfg.rescope_idf) {
        const auto& all = cache.counts(space);
        std::vector<TermCounts> subset;
        subset.reserve(n);
        for (auto d : node->docs) subset.push_back(all[d]);
        SpaceModel local = build_space_model(space, subset);
        for (std::size_t i = 0; i < n; ++i) {
          node_labels.push_back(
              doc_label(local.vectors[i], local.index, cfg.tc_fraction));
          labels[node->docs[i]] = node_labels.back();
        }
        vectors = std::move(local.vectors);
      } else {
        for (auto d : node->docs) {
          vectors.push_back(global.vectors[d]);
          node_labels.push_back(labels[d]);
        }
      }

      SplitRecord rec;
      rec.node_id = node->cluster_id;
      Assignment a;
      if (phase.k) {
        rec.k = std::min(*phase.k, n);
        a = kmeans_best_of(vectors, rec.k, cfg.seed, cfg.restarts,
                           cfg.max_iterations);
      } else {
        rec.auto_k = true;
        const auto range = default_k_range(n, cfg.auto_k_cap);
        TuneOptions opts{cfg.alpha, cfg.restarts, cfg.seed, cfg.max_iterations};
        auto tuned = tune_k(vectors, node_labels, range, opts);
        rec.k = tuned.best_k;
        rec.tune_table = std::move(tuned.table);
        a = std::move(tuned.best);
      }
      rec.objective_trace = a.objective_trace;
      rec.sse_trace = a.sse_trace;

      // Children ordered by their lowest document index.
      std::vector<std::vector<std::size_t>> groups(a.k);
      for (std::size_t i = 0; i < n; ++i) groups[a.cluster_of[i]].push_back(i);
      std::erase_if(groups, [](const auto& g) { return g.empty(); });
      std::sort(groups.begin(), groups.end(),
                [](const auto& x, const auto& y) { return x.front() < y.front(); });

      for (std::size_t c = 0; c < groups.size(); ++c) {
        ClusterNode child;
        child.cluster_id = node->depth == 0
                               ? fmt::format("{}", c + 1)
                               : fmt::format("{}.{}", node->cluster_id, c + 1);
        child.phase_space = space;
        child.depth = node->depth + 1;
        std::vector<LabelSet> member_labels;
        for (auto i : groups[c]) {
          child.docs.push_back(node->docs[i]);
          member_labels.push_back(node_labels[i]);
        }
        child.label = cluster_label(member_labels);
        node->children.push_back(std::move(child));
      }
      pr.splits.push_back(std::move(rec));
    }

    std::vector<ClusterNode*> layer_nodes;
    collect_leaves(result.root, layer_nodes);
    std::vector<std::uint32_t> cluster_of(corpus.size(), 0);
    for (std::size_t c = 0; c < layer_nodes.size(); ++c)
      for (auto d : layer_nodes[c]->docs) cluster_of[d] = static_cast<std::uint32_t>(c);
    pr.entropy = entropies(cluster_of, layer_nodes.size(), labels, cfg.alpha);
    result.phases.push_back(std::move(pr));
  }
  return result;
}

std::vector<const ClusterNode*> leaves(const ClusterNode& root) {
  std::vector<const ClusterNode*> out;
  std::vector<const ClusterNode*> stack{&root};
  while (!stack.empty()) {
    const ClusterNode* n = stack.back();
    stack.pop_back();
    if (n->is_leaf()) {
      out.push_back(n);
      continue;
    }
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
      stack.push_back(&*it);
  }
  return out;
}

std::vector<const ClusterNode*> layer(const ClusterNode& root, std::size_t depth) {
  std::vector<const ClusterNode*> out;
  std::vector<const ClusterNode*> stack{&root};
  while (!stack.empty()) {
    const ClusterNode* n = stack.back();
    stack.pop_back();
    if (n->depth == depth || n->is_leaf()) {
      out.push_back(n);
      continue;
    }
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
      stack.push_back(&*it);
  }
  return out;
}

}  // namespace nevsm
