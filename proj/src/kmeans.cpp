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

#include "nevsm/kmeans.hpp"

#include <algorithm>
#include <cmath>
#include <optional>

#include <fmt/core.h>

#include "nevsm/error.hpp"
#include "nevsm/kernels.hpp"
#include "nevsm/parallel.hpp"
#include "nevsm/rng.hpp"

namespace nevsm {

std::vector<std::size_t> Assignment::cluster_sizes() const {
  std::vector<std::size_t> sizes(k, 0);
  for (auto c : cluster_of) ++sizes[c];
  return sizes;
}

namespace {

struct Points {
  std::vector<SparseVector> unit;
  std::vector<double> sqnorm;
  std::size_t dim = 0;
  std::size_t nonzero = 0;
};

Points prepare(std::span<const SparseVector> vectors) {
  Points p;
  p.unit.reserve(vectors.size());
  p.sqnorm.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.space() != vectors.front().space())
      throw InvalidArgument("k-means input mixes feature spaces");
    p.unit.push_back(v.normalized());
    p.sqnorm.push_back(p.unit.back().squared_norm());
    if (!v.empty()) {
      ++p.nonzero;
      p.dim = std::max<std::size_t>(p.dim, v.entries().back().dim + 1);
    }
  }
  return p;
}

// k-means++ seeding over the nonzero points.
void seed_centroids(const Points& p, CentroidSet& centroids, SeededRng& rng) {
  std::vector<std::uint32_t> candidates;
  for (std::size_t i = 0; i < p.unit.size(); ++i)
    if (!p.unit[i].empty()) candidates.push_back(static_cast<std::uint32_t>(i));
  if (candidates.empty()) return;

  std::vector<char> chosen(p.unit.size(), 0);
  std::vector<double> d2(p.unit.size(), 0.0);
  auto take = [&](std::size_t c, std::uint32_t i) {
    chosen[i] = 1;
    centroids.set_point(c, p.unit[i]);
    for (auto j : candidates) {
      const double d = centroids.squared_distance(c, p.unit[j], p.sqnorm[j]);
      d2[j] = c == 0 ? d : std::min(d2[j], d);
    }
  };

  take(0, candidates[rng.index(candidates.size())]);
  for (std::size_t c = 1; c < centroids.k(); ++c) {
    double total = 0.0;
    for (auto j : candidates)
      if (!chosen[j]) total += d2[j];
    std::optional<std::uint32_t> pick;
    if (total > 0.0) {
      const double r = rng.unit() * total;
      double acc = 0.0;
      for (auto j : candidates) {
        if (chosen[j] || d2[j] <= 0.0) continue;
        acc += d2[j];
        pick = j;
        if (acc > r) break;
      }
    } else {
      for (auto j : candidates)
        if (!chosen[j]) {
          pick = j;
          break;
        }
    }
    if (!pick) break;  // fewer nonzero points than clusters
    take(c, *pick);
  }
}

// Gives every memberless cluster the point farthest from its centroid,
// taken from a cluster that keeps at least one member.
void repair_empty(const Points& p, CentroidSet& centroids,
                  std::vector<std::uint32_t>& cluster_of,
                  std::vector<double>& sq_dist) {
  const std::size_t k = centroids.k();
  std::vector<std::size_t> count(k, 0);
  for (std::size_t i = 0; i < p.unit.size(); ++i)
    if (!p.unit[i].empty()) ++count[cluster_of[i]];

  for (std::size_t c = 0; c < k; ++c) {
    if (count[c] > 0) continue;
    std::optional<std::size_t> far;
    for (std::size_t i = 0; i < p.unit.size(); ++i) {
      if (p.unit[i].empty() || count[cluster_of[i]] < 2) continue;
      if (!far || sq_dist[i] > sq_dist[*far]) far = i;
    }
    if (!far) return;
    --count[cluster_of[*far]];
    cluster_of[*far] = static_cast<std::uint32_t>(c);
    ++count[c];
    sq_dist[*far] = 0.0;
    centroids.set_point(c, p.unit[*far]);
  }
}

void assign(const Points& p, const CentroidSet& centroids,
            std::vector<std::uint32_t>& cluster_of, std::vector<double>& sq_dist) {
  if (parallel::enabled())
    omp::nearest_centroids(p.unit, p.sqnorm, centroids, cluster_of, sq_dist);
  else
    serial::nearest_centroids(p.unit, p.sqnorm, centroids, cluster_of, sq_dist);
}

void update(const Points& p, const std::vector<std::uint32_t>& cluster_of,
            CentroidSet& centroids) {
  if (parallel::enabled())
    omp::update_centroids(p.unit, cluster_of, centroids);
  else
    serial::update_centroids(p.unit, cluster_of, centroids);
}

void record_objectives(const Points& p, const CentroidSet& centroids,
                       const std::vector<std::uint32_t>& cluster_of,
                       Assignment& out) {
  double sse = 0.0, f = 0.0;
  for (std::size_t i = 0; i < p.unit.size(); ++i) {
    if (p.unit[i].empty()) continue;
    const double d = centroids.squared_distance(cluster_of[i], p.unit[i], p.sqnorm[i]);
    sse += d;
    f += std::sqrt(d);
  }
  out.sse_trace.push_back(sse);
  out.objective_trace.push_back(f);
}

}  // namespace

Assignment kmeans(std::span<const SparseVector> vectors, std::size_t k,
                  std::uint64_t seed, std::size_t max_iterations) {
  if (vectors.empty()) throw InvalidArgument("k-means on empty input");
  if (k < 1 || k > vectors.size())
    throw InvalidArgument(
        fmt::format("k = {} outside [1, {}]", k, vectors.size()));
  if (max_iterations == 0)
    throw InvalidArgument("max_iterations must be positive");

  const Points p = prepare(vectors);
  CentroidSet centroids(k, p.dim);
  SeededRng rng(seed);
  seed_centroids(p, centroids, rng);

  Assignment out;
  out.k = k;
  std::vector<std::uint32_t> cluster_of(p.unit.size(), 0);
  std::vector<double> sq_dist(p.unit.size(), 0.0);
  std::vector<std::uint32_t> next(p.unit.size(), 0);

  assign(p, centroids, cluster_of, sq_dist);
  repair_empty(p, centroids, cluster_of, sq_dist);
  update(p, cluster_of, centroids);
  record_objectives(p, centroids, cluster_of, out);
  out.iterations = 1;

  while (out.iterations < max_iterations) {
    assign(p, centroids, next, sq_dist);
    repair_empty(p, centroids, next, sq_dist);
    if (next == cluster_of) {
      out.converged = true;
      // Repair may have reseeded a centroid; restore the means.
      update(p, cluster_of, centroids);
      break;
    }
    cluster_of.swap(next);
    update(p, cluster_of, centroids);
    record_objectives(p, centroids, cluster_of, out);
    ++out.iterations;
  }

  out.cluster_of = std::move(cluster_of);
  out.centroids.reserve(k);
  for (std::size_t c = 0; c < k; ++c)
    out.centroids.push_back(centroids.to_sparse(c, vectors.front().space()));
  return out;
}

Assignment kmeans_best_of(std::span<const SparseVector> vectors, std::size_t k,
                          std::uint64_t seed, std::size_t restarts,
                          std::size_t max_iterations) {
  if (restarts < 1) throw InvalidArgument("restarts must be at least 1");
  Assignment best = kmeans(vectors, k, seed, max_iterations);
  for (std::size_t r = 1; r < restarts; ++r) {
    Assignment run = kmeans(vectors, k, seed + r, max_iterations);
    if (run.sse() < best.sse()) best = std::move(run);
  }
  return best;
}

}  // namespace nevsm
