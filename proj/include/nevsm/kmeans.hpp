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

#ifndef NEVSM_KMEANS_HPP_
#define NEVSM_KMEANS_HPP_

// Seeded Lloyd k-means on L2-normalized sparse vectors.
//
// On unit vectors ||a - b||^2 = 2 - 2 cos(a, b), so nearest-centroid
// assignment is maximal-cosine assignment. Convergence is judged on the
// within-cluster sum of squares (SSE), which Lloyd iteration never
// increases; the sum of plain Euclidean distances is traced alongside.
//
// Zero vectors stay in cluster 0 and take no part in centroids or
// objectives.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "nevsm/vsm.hpp"

namespace nevsm {

struct Assignment {
  std::size_t k = 0;
  std::vector<std::uint32_t> cluster_of;
  std::vector<SparseVector> centroids;
  // Sum over points of ||x - c||, one value per centroid update.
  std::vector<double> objective_trace;
  // Sum over points of ||x - c||^2, one value per centroid update.
  std::vector<double> sse_trace;
  std::size_t iterations = 0;
  bool converged = false;

  double sse() const { return sse_trace.empty() ? 0.0 : sse_trace.back(); }
  std::vector<std::size_t> cluster_sizes() const;
};

// Throws InvalidArgument on empty input, k outside [1, n], mixed spaces or
// max_iterations == 0.
Assignment kmeans(std::span<const SparseVector> vectors, std::size_t k,
                  std::uint64_t seed, std::size_t max_iterations = 100);

// Runs seeds seed, seed+1, ..., seed+restarts-1 and keeps the lowest final
// SSE (earliest run on ties).
Assignment kmeans_best_of(std::span<const SparseVector> vectors, std::size_t k,
                          std::uint64_t seed, std::size_t restarts,
                          std::size_t max_iterations = 100);

}  // namespace nevsm

#endif  // NEVSM_KMEANS_HPP_
