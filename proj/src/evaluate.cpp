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

#include "nevsm/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <fmt/core.h>

#include "nevsm/error.hpp"
#include "nevsm/parallel.hpp"

namespace nevsm {

namespace {

// Relative slack on the threshold comparison so that a weight sitting
// exactly on T_c is selected regardless of rounding in the mass sum.
constexpr double kThresholdSlack = 1e-12;

void check_fraction(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0))
    throw InvalidArgument(fmt::format("{} = {} outside [0, 1]", what, x));
}

}  // namespace

std::vector<std::uint32_t> label_dimensions(const SparseVector& v,
                                            double tc_fraction) {
  check_fraction(tc_fraction, "tc_fraction");
  std::vector<std::uint32_t> dims;
  if (v.empty()) return dims;
  const double threshold = tc_fraction * v.sum();
  const double cut = threshold - kThresholdSlack * threshold;
  for (const auto& e : v.entries())
    if (e.weight >= cut) dims.push_back(e.dim);
  if (dims.empty()) {
    const SparseEntry* best = &v.entries().front();
    for (const auto& e : v.entries())
      if (e.weight > best->weight) best = &e;
    dims.push_back(best->dim);
  }
  return dims;
}

LabelSet doc_label(const SparseVector& v, const TermIndex& index,
                   double tc_fraction) {
  LabelSet out;
  for (auto d : label_dimensions(v, tc_fraction)) out.push_back(index.term(d));
  return out;
}

LabelSet cluster_label(std::span<const LabelSet> member_labels) {
  LabelSet out;
  for (const auto& l : member_labels) out.insert(out.end(), l.begin(), l.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string format_label(const LabelSet& label) {
  if (label.empty()) return kBottomLabel;
  std::string s;
  for (const auto& t : label) {
    if (!s.empty()) s += ',';
    s += t.key();
  }
  return s;
}

double overall_entropy(double cluster_entropy, double class_entropy,
                       double alpha) {
  check_fraction(alpha, "alpha");
  return alpha * cluster_entropy + (1.0 - alpha) * class_entropy;
}

std::vector<std::uint32_t> class_ids(std::span<const LabelSet> labels) {
  std::map<LabelSet, std::uint32_t> ids;
  std::vector<std::uint32_t> out;
  out.reserve(labels.size());
  for (const auto& l : labels) {
    auto [it, fresh] = ids.emplace(l, static_cast<std::uint32_t>(ids.size()));
    out.push_back(it->second);
  }
  return out;
}

EntropyTable EntropyTable::build(std::span<const std::uint32_t> cluster_of,
                                 std::size_t k,
                                 std::span<const std::uint32_t> class_of) {
  if (cluster_of.size() != class_of.size())
    throw InvalidArgument("every document needs a label");
  std::size_t classes = 0;
  for (auto c : class_of) classes = std::max<std::size_t>(classes, c + 1);
  EntropyTable t;
  t.n.assign(k, std::vector<std::size_t>(classes, 0));
  t.cluster_totals.assign(k, 0);
  t.class_totals.assign(classes, 0);
  for (std::size_t d = 0; d < cluster_of.size(); ++d) {
    if (cluster_of[d] >= k)
      throw InvalidArgument(fmt::format("cluster {} outside [0, {})", cluster_of[d], k));
    ++t.n[cluster_of[d]][class_of[d]];
    ++t.cluster_totals[cluster_of[d]];
    ++t.class_totals[class_of[d]];
  }
  t.total = cluster_of.size();
  return t;
}

EntropyReport entropies_from_classes(std::span<const std::uint32_t> cluster_of,
                                     std::size_t k,
                                     std::span<const std::uint32_t> class_of,
                                     double alpha) {
  check_fraction(alpha, "alpha");
  const auto t = EntropyTable::build(cluster_of, k, class_of);
  EntropyReport r;
  r.k = k;
  r.alpha = alpha;
  if (t.total == 0) return r;
  const auto N = static_cast<double>(t.total);

  double ec = 0.0;
  for (std::size_t i = 0; i < t.n.size(); ++i) {
    if (t.cluster_totals[i] == 0) continue;
    const auto nc = static_cast<double>(t.cluster_totals[i]);
    double inner = 0.0;
    for (std::size_t j = 0; j < t.class_totals.size(); ++j) {
      if (t.n[i][j] == 0) continue;
      const double p = static_cast<double>(t.n[i][j]) / nc;
      inner += p * std::log2(p);
    }
    ec += nc / N * inner;
  }
  double el = 0.0;
  for (std::size_t j = 0; j < t.class_totals.size(); ++j) {
    if (t.class_totals[j] == 0) continue;
    const auto nl = static_cast<double>(t.class_totals[j]);
    double inner = 0.0;
    for (std::size_t i = 0; i < t.n.size(); ++i) {
      if (t.n[i][j] == 0) continue;
      const double p = static_cast<double>(t.n[i][j]) / nl;
      inner += p * std::log2(p);
    }
    el += nl / N * inner;
  }
  // Adding +0.0 turns a -0.0 into +0.0.
  r.cluster_entropy = -ec + 0.0;
  r.class_entropy = -el + 0.0;
  r.overall = overall_entropy(r.cluster_entropy, r.class_entropy, alpha);
  return r;
}

EntropyReport entropies(std::span<const std::uint32_t> cluster_of,
                        std::size_t k, std::span<const LabelSet> labels,
                        double alpha) {
  if (labels.size() != cluster_of.size())
    throw InvalidArgument(fmt::format("{} documents but {} labels",
                                      cluster_of.size(), labels.size()));
  const auto classes = class_ids(labels);
  return entropies_from_classes(cluster_of, k, classes, alpha);
}

TuneResult tune_k(std::span<const SparseVector> vectors,
                  std::span<const LabelSet> labels,
                  std::span<const std::size_t> k_range,
                  const TuneOptions& options) {
  if (k_range.empty()) throw InvalidArgument("empty k range");
  check_fraction(options.alpha, "alpha");
  if (labels.size() != vectors.size())
    throw InvalidArgument("every document needs a label");
  for (auto k : k_range)
    if (k < 1 || k > vectors.size())
      throw InvalidArgument(
          fmt::format("k = {} outside [1, {}]", k, vectors.size()));

  const auto classes = class_ids(labels);
  std::vector<Assignment> runs(k_range.size());
  TuneResult result;
  result.table.resize(k_range.size());

  const auto n = static_cast<std::ptrdiff_t>(k_range.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel::enabled())
  for (std::ptrdiff_t r = 0; r < n; ++r) {
    runs[r] = kmeans_best_of(vectors, k_range[r], options.seed,
                             options.restarts, options.max_iterations);
    result.table[r] =
        entropies_from_classes(runs[r].cluster_of, k_range[r], classes, options.alpha);
  }

  std::size_t best = 0;
  for (std::size_t r = 1; r < k_range.size(); ++r) {
    const auto& row = result.table[r];
    const auto& cur = result.table[best];
    if (row.overall < cur.overall || (row.overall == cur.overall && row.k < cur.k))
      best = r;
  }
  result.best_k = k_range[best];
  result.best = std::move(runs[best]);
  return result;
}

std::vector<std::size_t> default_k_range(std::size_t n, std::size_t cap) {
  if (n < 2) return {1};
  std::vector<std::size_t> out;
  for (std::size_t k = 2; k <= std::min(n, cap); ++k) out.push_back(k);
  return out;
}

}  // namespace nevsm
