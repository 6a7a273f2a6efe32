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

#include "nevsm/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace nevsm {

CentroidSet::CentroidSet(std::size_t k, std::size_t dim)
    : dim_(dim),
      dense_(dim <= kDenseLimit),
      sqnorm_(k, 0.0),
      active_(k, 0) {
  if (dense_)
    dense_rows_.assign(k * dim, 0.0);
  else
    sparse_rows_.resize(k);
}

void CentroidSet::set_point(std::size_t c, const SparseVector& point) {
  if (dense_) {
    double* row = dense_rows_.data() + c * dim_;
    std::fill(row, row + dim_, 0.0);
    for (const auto& e : point.entries()) row[e.dim] = e.weight;
  } else {
    sparse_rows_[c] = point.entries();
  }
  finish(c);
}

void CentroidSet::set_mean(std::size_t c, std::span<const SparseVector> points,
                           std::span<const std::uint32_t> members) {
  if (members.empty()) {
    clear(c);
    return;
  }
  const auto n = static_cast<double>(members.size());
  if (dense_) {
    double* row = dense_rows_.data() + c * dim_;
    std::fill(row, row + dim_, 0.0);
    for (auto m : members)
      for (const auto& e : points[m].entries()) row[e.dim] += e.weight;
    for (std::size_t d = 0; d < dim_; ++d) row[d] /= n;
  } else {
    std::map<std::uint32_t, double> acc;
    for (auto m : members)
      for (const auto& e : points[m].entries()) acc[e.dim] += e.weight;
    auto& row = sparse_rows_[c];
    row.clear();
    row.reserve(acc.size());
    for (const auto& [d, w] : acc) row.push_back({d, w / n});
  }
  finish(c);
}

void CentroidSet::clear(std::size_t c) {
  if (dense_) {
    double* row = dense_rows_.data() + c * dim_;
    std::fill(row, row + dim_, 0.0);
  } else {
    sparse_rows_[c].clear();
  }
  sqnorm_[c] = 0.0;
  active_[c] = 0;
}

void CentroidSet::finish(std::size_t c) {
  double s = 0.0;
  if (dense_) {
    const double* row = dense_rows_.data() + c * dim_;
    for (std::size_t d = 0; d < dim_; ++d) s += row[d] * row[d];
  } else {
    for (const auto& e : sparse_rows_[c]) s += e.weight * e.weight;
  }
  sqnorm_[c] = s;
  active_[c] = 1;
}

double CentroidSet::dot(std::size_t c, const SparseVector& x) const {
  double s = 0.0;
  if (dense_) {
    const double* row = dense_rows_.data() + c * dim_;
    for (const auto& e : x.entries()) s += e.weight * row[e.dim];
  } else {
    const auto& row = sparse_rows_[c];
    std::size_t j = 0;
    for (const auto& e : x.entries()) {
      while (j < row.size() && row[j].dim < e.dim) ++j;
      if (j == row.size()) break;
      if (row[j].dim == e.dim) s += e.weight * row[j].weight;
    }
  }
  return s;
}

double CentroidSet::squared_distance(std::size_t c, const SparseVector& x,
                                     double x_sqnorm) const {
  return std::max(0.0, x_sqnorm + sqnorm_[c] - 2.0 * dot(c, x));
}

SparseVector CentroidSet::to_sparse(std::size_t c, FeatureSpace space) const {
  std::vector<SparseEntry> entries;
  if (dense_) {
    const double* row = dense_rows_.data() + c * dim_;
    for (std::size_t d = 0; d < dim_; ++d)
      if (row[d] != 0.0) entries.push_back({static_cast<std::uint32_t>(d), row[d]});
  } else {
    entries = sparse_rows_[c];
  }
  return SparseVector::from_entries(space, std::move(entries));
}

namespace {

void nearest_one(std::size_t i, std::span<const SparseVector> points,
                 std::span<const double> sqnorms, const CentroidSet& centroids,
                 std::span<std::uint32_t> cluster_of, std::span<double> sq_dist) {
  if (points[i].empty()) {
    cluster_of[i] = 0;
    sq_dist[i] = 0.0;
    return;
  }
  double best = std::numeric_limits<double>::infinity();
  std::uint32_t best_c = 0;
  for (std::size_t c = 0; c < centroids.k(); ++c) {
    if (!centroids.active(c)) continue;
    const double d = centroids.squared_distance(c, points[i], sqnorms[i]);
    if (d < best) {
      best = d;
      best_c = static_cast<std::uint32_t>(c);
    }
  }
  cluster_of[i] = best_c;
  sq_dist[i] = std::isinf(best) ? sqnorms[i] : best;
}

// Nonzero members of each cluster, ascending.
std::vector<std::vector<std::uint32_t>> members_by_cluster(
    std::span<const SparseVector> points,
    std::span<const std::uint32_t> cluster_of, std::size_t k) {
  std::vector<std::vector<std::uint32_t>> members(k);
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!points[i].empty())
      members[cluster_of[i]].push_back(static_cast<std::uint32_t>(i));
  return members;
}

}  // namespace

namespace serial {

std::vector<TermCounts> count_terms(std::span<const Document> docs,
                                    FeatureSpace space,
                                    const KnowledgeBase& kb) {
  std::vector<TermCounts> out(docs.size());
  for (std::size_t i = 0; i < docs.size(); ++i)
    out[i] = term_occurrences(docs[i], space, kb);
  return out;
}

std::vector<SparseVector> vectorize_all(std::span<const TermCounts> counts,
                                        const TermIndex& index) {
  std::vector<SparseVector> out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    out[i] = vectorize(counts[i], index);
  return out;
}

void nearest_centroids(std::span<const SparseVector> points,
                       std::span<const double> point_sqnorms,
                       const CentroidSet& centroids,
                       std::span<std::uint32_t> cluster_of,
                       std::span<double> sq_dist) {
  for (std::size_t i = 0; i < points.size(); ++i)
    nearest_one(i, points, point_sqnorms, centroids, cluster_of, sq_dist);
}

void update_centroids(std::span<const SparseVector> points,
                      std::span<const std::uint32_t> cluster_of,
                      CentroidSet& centroids) {
  const auto members = members_by_cluster(points, cluster_of, centroids.k());
  for (std::size_t c = 0; c < centroids.k(); ++c)
    centroids.set_mean(c, points, members[c]);
}

}  // namespace serial

namespace omp {

std::vector<TermCounts> count_terms(std::span<const Document> docs,
                                    FeatureSpace space,
                                    const KnowledgeBase& kb) {
  std::vector<TermCounts> out(docs.size());
  const auto n = static_cast<std::ptrdiff_t>(docs.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    out[i] = term_occurrences(docs[i], space, kb);
  return out;
}

std::vector<SparseVector> vectorize_all(std::span<const TermCounts> counts,
                                        const TermIndex& index) {
  std::vector<SparseVector> out(counts.size());
  const auto n = static_cast<std::ptrdiff_t>(counts.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = vectorize(counts[i], index);
  return out;
}

void nearest_centroids(std::span<const SparseVector> points,
                       std::span<const double> point_sqnorms,
                       const CentroidSet& centroids,
                       std::span<std::uint32_t> cluster_of,
                       std::span<double> sq_dist) {
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    nearest_one(static_cast<std::size_t>(i), points, point_sqnorms, centroids,
                cluster_of, sq_dist);
}

void update_centroids(std::span<const SparseVector> points,
                      std::span<const std::uint32_t> cluster_of,
                      CentroidSet& centroids) {
  const auto members = members_by_cluster(points, cluster_of, centroids.k());
  const auto k = static_cast<std::ptrdiff_t>(centroids.k());
  // Each cluster's sum runs over its members in ascending order on a
  // single thread.
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t c = 0; c < k; ++c)
    centroids.set_mean(static_cast<std::size_t>(c), points, members[c]);
}

}  // namespace omp

}  // namespace nevsm
