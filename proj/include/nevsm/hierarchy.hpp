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

#ifndef NEVSM_HIERARCHY_HPP_
#define NEVSM_HIERARCHY_HPP_

// Top-down multi-phase clustering. Phase 1 splits the whole corpus on one
// feature space; every later phase splits each current leaf with at least
// min_split_size documents on its own space. Smaller leaves are left as
// they are.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nevsm/corpus.hpp"
#include "nevsm/evaluate.hpp"
#include "nevsm/ontology.hpp"
#include "nevsm/term.hpp"

namespace nevsm {

struct PhaseConfig {
  FeatureSpace space = FeatureSpace::Type;
  // nullopt selects k by tune_k over default_k_range.
  std::optional<std::size_t> k;
};

struct ClusterConfig {
  std::uint64_t seed = 42;
  std::size_t max_iterations = 100;
  std::size_t restarts = 4;
  std::size_t min_split_size = 2;
  double alpha = 0.5;
  double tc_fraction = 0.4;
  // Recompute idf inside each node instead of using corpus-wide idf.
  bool rescope_idf = false;
  std::size_t auto_k_cap = 50;
};

struct ClusterNode {
  std::string cluster_id;
  // Space the node was produced by; empty for the root.
  std::optional<FeatureSpace> phase_space;
  std::size_t depth = 0;
  std::vector<std::size_t> docs;  // corpus indices, ascending
  LabelSet label;
  std::vector<ClusterNode> children;

  bool is_leaf() const { return children.empty(); }
};

// One k-means run performed while splitting a node.
struct SplitRecord {
  std::string node_id;
  std::size_t k = 0;
  bool auto_k = false;
  std::vector<double> objective_trace;
  std::vector<double> sse_trace;
  std::vector<EntropyReport> tune_table;  // empty for explicit k
};

struct PhaseResult {
  FeatureSpace space = FeatureSpace::Type;
  // Entropy of the whole layer after this phase against the documents'
  // labels in this phase's space.
  EntropyReport entropy;
  std::vector<SplitRecord> splits;
};

struct HierarchyResult {
  ClusterNode root;
  std::vector<PhaseResult> phases;
};

// Throws InvalidArgument for an empty phase list or invalid config;
// errors from k-means and tuning propagate.
HierarchyResult hierarchical_cluster(const Corpus& corpus,
                                     const KnowledgeBase& kb,
                                     std::span<const PhaseConfig> phases,
                                     const ClusterConfig& config);

// Leaves in depth-first order.
std::vector<const ClusterNode*> leaves(const ClusterNode& root);
// Nodes at `depth`, with shallower leaves standing in for missing nodes.
std::vector<const ClusterNode*> layer(const ClusterNode& root, std::size_t depth);

}  // namespace nevsm

#endif  // NEVSM_HIERARCHY_HPP_
