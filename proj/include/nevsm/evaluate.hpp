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

#ifndef NEVSM_EVALUATE_HPP_
#define NEVSM_EVALUATE_HPP_

// Document labels, cluster/class entropy, and the k sweep.
//
// A document is labeled by its feature values whose tf.idf weight reaches
// T_c = tc_fraction * (sum of the document's weights); if none does, by its
// heaviest value. Two documents share a class iff their label sets are
// equal. With n_ij documents of class j in cluster i (base-2 logs):
//
//   Ec = -sum_i nc_i/N sum_j n_ij/nc_i log(n_ij/nc_i)
//   El = -sum_j nl_j/N sum_i n_ij/nl_j log(n_ij/nl_j)
//   E  = alpha Ec + (1 - alpha) El

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "nevsm/kmeans.hpp"
#include "nevsm/term.hpp"
#include "nevsm/vsm.hpp"

namespace nevsm {

// Sorted, duplicate-free. The empty set is the reserved class of
// documents whose vector is zero.
using LabelSet = std::vector<Term>;

inline constexpr const char* kBottomLabel = "⊥";

// Dimensions selected by the threshold rule, ascending. Empty for the
// zero vector. Throws InvalidArgument when tc_fraction is outside [0, 1].
std::vector<std::uint32_t> label_dimensions(const SparseVector& v,
                                            double tc_fraction);
LabelSet doc_label(const SparseVector& v, const TermIndex& index,
                   double tc_fraction);

LabelSet cluster_label(std::span<const LabelSet> member_labels);

// "key1,key2" or the bottom symbol.
std::string format_label(const LabelSet& label);

struct EntropyReport {
  std::size_t k = 0;
  double alpha = 0.5;
  double cluster_entropy = 0.0;
  double class_entropy = 0.0;
  double overall = 0.0;
};

// alpha * Ec + (1 - alpha) * El.
double overall_entropy(double cluster_entropy, double class_entropy,
                       double alpha);

// Dense class ids in order of first appearance.
std::vector<std::uint32_t> class_ids(std::span<const LabelSet> labels);

// Contingency counts of clusters against classes.
struct EntropyTable {
  std::vector<std::vector<std::size_t>> n;  // [cluster][class]
  std::vector<std::size_t> cluster_totals;
  std::vector<std::size_t> class_totals;
  std::size_t total = 0;

  static EntropyTable build(std::span<const std::uint32_t> cluster_of,
                            std::size_t k,
                            std::span<const std::uint32_t> class_of);
};

EntropyReport entropies_from_classes(std::span<const std::uint32_t> cluster_of,
                                     std::size_t k,
                                     std::span<const std::uint32_t> class_of,
                                     double alpha);
EntropyReport entropies(std::span<const std::uint32_t> cluster_of,
                        std::size_t k, std::span<const LabelSet> labels,
                        double alpha);

struct TuneOptions {
  double alpha = 0.5;
  std::size_t restarts = 4;
  std::uint64_t seed = 42;
  std::size_t max_iterations = 100;
};

struct TuneResult {
  std::size_t best_k = 0;
  // One row per entry of k_range, in the same order.
  std::vector<EntropyReport> table;
  Assignment best;
};

// Clusters once per k and keeps argmin E, smallest k on ties. Different k
// values run concurrently when parallelism is enabled.
TuneResult tune_k(std::span<const SparseVector> vectors,
                  std::span<const LabelSet> labels,
                  std::span<const std::size_t> k_range,
                  const TuneOptions& options);

// 2..min(n, cap); {1} when n < 2.
std::vector<std::size_t> default_k_range(std::size_t n, std::size_t cap = 50);

}  // namespace nevsm

#endif  // NEVSM_EVALUATE_HPP_
