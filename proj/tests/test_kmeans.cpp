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

#include <cmath>
#include <set>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "nevsm/error.hpp"
#include "nevsm/kmeans.hpp"
#include "nevsm/parallel.hpp"
#include "nevsm/rng.hpp"
#include "oracles.hpp"

using namespace nevsm;

namespace {

SparseVector dense_vec(const std::vector<double>& x) {
  std::vector<SparseEntry> e;
  for (std::uint32_t i = 0; i < x.size(); ++i) e.push_back({i, x[i]});
  return SparseVector::from_entries(FeatureSpace::Type, e);
}

std::vector<SparseVector> planted() {
  return {dense_vec({1.0, 0.0}), dense_vec({0.97, 0.24}), dense_vec({0.0, 1.0}),
          dense_vec({0.24, 0.97})};
}

bool non_increasing(const std::vector<double>& trace) {
  for (std::size_t i = 1; i < trace.size(); ++i)
    if (trace[i] > trace[i - 1] * (1.0 + 1e-12) + 1e-15) return false;
  return true;
}

bool same_partition(const std::vector<std::uint32_t>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if ((a[i] == a[j]) != (b[i] == b[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("k equal to the number of points isolates every point") {
  auto pts = planted();
  auto a = kmeans(pts, pts.size(), 3);
  CHECK(std::set<std::uint32_t>(a.cluster_of.begin(), a.cluster_of.end()).size() == pts.size());
  CHECK(a.objective_trace.back() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(a.sse() == doctest::Approx(0.0));
}

TEST_CASE("k = 1 gives the mean of the normalized vectors") {
  std::vector<SparseVector> pts{dense_vec({2.0, 0.0}), dense_vec({0.0, 5.0})};
  auto a = kmeans(pts, 1, 1);
  CHECK(a.cluster_of == std::vector<std::uint32_t>{0, 0});
  REQUIRE(a.centroids.size() == 1);
  CHECK(a.centroids[0].weight(0) == 0.5);
  CHECK(a.centroids[0].weight(1) == 0.5);
  CHECK(a.converged);
}

TEST_CASE("planted directions reach the exhaustive optimum") {
  auto pts = planted();
  std::vector<oracle::Dense> raw;
  for (const auto& v : pts) raw.push_back({v.weight(0), v.weight(1)});
  const auto best = oracle::best_bipartition(raw);
  CHECK(best.count == 7);
  CHECK(best.part == std::vector<int>{0, 0, 1, 1});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto a = kmeans_best_of(pts, 2, seed, 4);
    CHECK(same_partition(a.cluster_of, best.part));
    CHECK(a.sse() == doctest::Approx(best.sse).epsilon(1e-12));
  }
}

TEST_CASE("best-of with one restart is a single run") {
  auto s = gen_synthetic({3, 10, 8, 0.2, 4});
  auto model = build_space_model(s.corpus, FeatureSpace::Name, s.kb);
  for (std::uint64_t seed : {1u, 2u, 99u}) {
    auto a = kmeans(model.vectors, 4, seed);
    auto b = kmeans_best_of(model.vectors, 4, seed, 1);
    CHECK(a.cluster_of == b.cluster_of);
    CHECK(a.sse_trace == b.sse_trace);
    CHECK(a.objective_trace == b.objective_trace);
  }
}

TEST_CASE("best-of never loses to its own runs and traces never increase") {
  auto s = gen_synthetic({4, 15, 8, 0.3, 12});
  for (auto space : {FeatureSpace::Name, FeatureSpace::Type, FeatureSpace::Identifier}) {
    auto model = build_space_model(s.corpus, space, s.kb);
    for (std::size_t k : {2u, 5u, 9u}) {
      auto best = kmeans_best_of(model.vectors, k, 100, 5);
      for (std::uint64_t r = 0; r < 5; ++r) {
        auto run = kmeans(model.vectors, k, 100 + r);
        CHECK(best.sse() <= run.sse());
        CHECK(non_increasing(run.sse_trace));
        CHECK(run.sse_trace.size() == run.objective_trace.size());
        CHECK(run.sse_trace.size() == run.iterations);
      }
    }
  }
}

TEST_CASE("every cluster is nonempty when there are enough nonzero points") {
  SeededRng rng(8);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SparseVector> pts;
    const std::size_t n = 2 + rng.index(10);
    for (std::size_t i = 0; i < n; ++i) {
      // Few distinct directions so duplicates are common.
      pts.push_back(dense_vec({static_cast<double>(rng.index(2)), static_cast<double>(1 + rng.index(2))}));
    }
    const std::size_t k = 1 + rng.index(n);
    auto a = kmeans(pts, k, trial);
    for (auto size : a.cluster_sizes()) CHECK(size > 0);
  }
}

TEST_CASE("zero vectors go to cluster 0 and stay out of the objective") {
  std::vector<SparseVector> pts{SparseVector(FeatureSpace::Type), dense_vec({1.0, 0.0}),
                                dense_vec({0.0, 1.0}), SparseVector(FeatureSpace::Type)};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto a = kmeans(pts, 2, seed);
    CHECK(a.cluster_of[0] == 0);
    CHECK(a.cluster_of[3] == 0);
    CHECK(a.cluster_of[1] != a.cluster_of[2]);
    CHECK(a.sse() == 0.0);
  }
  std::vector<SparseVector> zeros(3, SparseVector(FeatureSpace::Type));
  auto z = kmeans(zeros, 2, 1);
  CHECK(z.cluster_of == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("results do not depend on whether centroids are dense") {
  auto s = gen_synthetic({3, 12, 8, 0.2, 6});
  auto model = build_space_model(s.corpus, FeatureSpace::NameType, s.kb);
  std::vector<SparseVector> far;
  for (const auto& v : model.vectors) {
    auto e = v.entries();
    for (auto& x : e) x.dim += 10000;
    far.push_back(SparseVector::from_entries(v.space(), e));
  }
  auto a = kmeans_best_of(model.vectors, 4, 5, 3);
  auto b = kmeans_best_of(far, 4, 5, 3);
  CHECK(a.cluster_of == b.cluster_of);
  CHECK(a.sse_trace == b.sse_trace);
  CHECK(a.objective_trace == b.objective_trace);
}

TEST_CASE("serial and parallel k-means agree exactly") {
  auto s = gen_synthetic({3, 30, 10, 0.1, 7});
  auto model = build_space_model(s.corpus, FeatureSpace::Type, s.kb);
  Assignment a, b;
  {
    parallel::ScopedThreadCount one(1);
    a = kmeans_best_of(model.vectors, 5, 9, 4);
  }
  {
    parallel::ScopedThreadCount many(8);
    b = kmeans_best_of(model.vectors, 5, 9, 4);
  }
  CHECK(a.cluster_of == b.cluster_of);
  CHECK(a.sse_trace == b.sse_trace);
  CHECK(a.centroids == b.centroids);
}

TEST_CASE("k-means argument errors") {
  auto pts = planted();
  CHECK_THROWS_AS(kmeans({}, 1, 1), InvalidArgument);
  CHECK_THROWS_AS(kmeans(pts, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(kmeans(pts, 5, 1), InvalidArgument);
  CHECK_THROWS_AS(kmeans(pts, 2, 1, 0), InvalidArgument);
  CHECK_THROWS_AS(kmeans_best_of(pts, 2, 1, 0), InvalidArgument);
  pts.push_back(SparseVector::from_entries(FeatureSpace::Name, {{0, 1.0}}));
  CHECK_THROWS_AS(kmeans(pts, 2, 1), InvalidArgument);
}
