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

#ifndef NEVSM_KERNELS_HPP_
#define NEVSM_KERNELS_HPP_

// Data-parallel inner loops. Each kernel has a serial reference in
// nevsm::serial and an OpenMP version in nevsm::omp with the same
// signature. The OpenMP versions only split work whose per-item results
// are independent, and every reduction is done afterwards in ascending
// index order, so both produce bit-identical output.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nevsm/corpus.hpp"
#include "nevsm/ontology.hpp"
#include "nevsm/term.hpp"
#include "nevsm/vsm.hpp"

namespace nevsm {

// k centroids, stored dense (k x dim) up to kDenseLimit dimensions and as
// sorted sparse rows beyond that. Both layouts give identical results.
class CentroidSet {
 public:
  static constexpr std::size_t kDenseLimit = 4096;

  CentroidSet(std::size_t k, std::size_t dim);

  std::size_t k() const { return sqnorm_.size(); }
  std::size_t dim() const { return dim_; }
  bool dense() const { return dense_; }
  // False for a centroid that has no members and was never seeded.
  bool active(std::size_t c) const { return active_[c] != 0; }

  void set_point(std::size_t c, const SparseVector& point);
  // Arithmetic mean of points[members], summed in the order given.
  void set_mean(std::size_t c, std::span<const SparseVector> points,
                std::span<const std::uint32_t> members);
  void clear(std::size_t c);

  double dot(std::size_t c, const SparseVector& x) const;
  double squared_norm(std::size_t c) const { return sqnorm_[c]; }
  // ||x - c||^2 from the expansion, clamped at 0.
  double squared_distance(std::size_t c, const SparseVector& x,
                          double x_sqnorm) const;

  SparseVector to_sparse(std::size_t c, FeatureSpace space) const;

 private:
  void finish(std::size_t c);

  std::size_t dim_;
  bool dense_;
  std::vector<double> dense_rows_;
  std::vector<std::vector<SparseEntry>> sparse_rows_;
  std::vector<double> sqnorm_;
  std::vector<char> active_;
};

namespace serial {

std::vector<TermCounts> count_terms(std::span<const Document> docs,
                                    FeatureSpace space,
                                    const KnowledgeBase& kb);
std::vector<SparseVector> vectorize_all(std::span<const TermCounts> counts,
                                        const TermIndex& index);
// Nearest active centroid per point, lowest index on ties. Zero points go
// to cluster 0 with distance 0.
void nearest_centroids(std::span<const SparseVector> points,
                       std::span<const double> point_sqnorms,
                       const CentroidSet& centroids,
                       std::span<std::uint32_t> cluster_of,
                       std::span<double> sq_dist);
// Recomputes every centroid as the mean of its nonzero members.
void update_centroids(std::span<const SparseVector> points,
                      std::span<const std::uint32_t> cluster_of,
                      CentroidSet& centroids);

}  // namespace serial

namespace omp {

std::vector<TermCounts> count_terms(std::span<const Document> docs,
                                    FeatureSpace space,
                                    const KnowledgeBase& kb);
std::vector<SparseVector> vectorize_all(std::span<const TermCounts> counts,
                                        const TermIndex& index);
void nearest_centroids(std::span<const SparseVector> points,
                       std::span<const double> point_sqnorms,
                       const CentroidSet& centroids,
                       std::span<std::uint32_t> cluster_of,
                       std::span<double> sq_dist);
void update_centroids(std::span<const SparseVector> points,
                      std::span<const std::uint32_t> cluster_of,
                      CentroidSet& centroids);

}  // namespace omp

}  // namespace nevsm

#endif  // NEVSM_KERNELS_HPP_
