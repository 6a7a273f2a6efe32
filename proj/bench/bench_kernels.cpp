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

// Serial reference kernels against their OpenMP counterparts.

#include <vector>

#include <benchmark/benchmark.h>

#include "nevsm/evaluate.hpp"
#include "nevsm/kernels.hpp"
#include "nevsm/parallel.hpp"
#include "nevsm/synthetic.hpp"
#include "nevsm/vsm.hpp"

namespace {

using nevsm::FeatureSpace;

const nevsm::SyntheticCorpus& corpus() {
  static const auto s = nevsm::gen_synthetic({8, 250, 30, 0.1, 1});
  return s;
}

struct Points {
  std::vector<nevsm::SparseVector> unit;
  std::vector<double> sqnorm;
  std::size_t dim;
};

const Points& points() {
  static const Points p = [] {
    auto model = nevsm::build_space_model(corpus().corpus, FeatureSpace::NameType, corpus().kb);
    Points out{{}, {}, model.index.size()};
    for (const auto& v : model.vectors) {
      out.unit.push_back(v.normalized());
      out.sqnorm.push_back(out.unit.back().squared_norm());
    }
    return out;
  }();
  return p;
}

nevsm::CentroidSet centroids(std::size_t k) {
  const auto& p = points();
  nevsm::CentroidSet c(k, p.dim);
  for (std::size_t j = 0; j < k; ++j) c.set_point(j, p.unit[j * 97 % p.unit.size()]);
  return c;
}

template <bool Parallel>
void BM_CountTerms(benchmark::State& state) {
  nevsm::parallel::ScopedThreadCount threads(static_cast<int>(state.range(0)));
  const auto& s = corpus();
  for (auto _ : state) {
    auto counts = Parallel ? nevsm::omp::count_terms(s.corpus.documents, FeatureSpace::NameType, s.kb)
                           : nevsm::serial::count_terms(s.corpus.documents, FeatureSpace::NameType, s.kb);
    benchmark::DoNotOptimize(counts);
  }
}

template <bool Parallel>
void BM_Vectorize(benchmark::State& state) {
  nevsm::parallel::ScopedThreadCount threads(static_cast<int>(state.range(0)));
  const auto& s = corpus();
  const auto counts = nevsm::serial::count_terms(s.corpus.documents, FeatureSpace::NameType, s.kb);
  const auto index = nevsm::TermIndex::build(FeatureSpace::NameType, counts);
  for (auto _ : state) {
    auto v = Parallel ? nevsm::omp::vectorize_all(counts, index)
                      : nevsm::serial::vectorize_all(counts, index);
    benchmark::DoNotOptimize(v);
  }
}

template <bool Parallel>
void BM_NearestCentroids(benchmark::State& state) {
  nevsm::parallel::ScopedThreadCount threads(static_cast<int>(state.range(0)));
  const auto& p = points();
  const auto c = centroids(static_cast<std::size_t>(state.range(1)));
  std::vector<std::uint32_t> cluster_of(p.unit.size());
  std::vector<double> sq(p.unit.size());
  for (auto _ : state) {
    if (Parallel)
      nevsm::omp::nearest_centroids(p.unit, p.sqnorm, c, cluster_of, sq);
    else
      nevsm::serial::nearest_centroids(p.unit, p.sqnorm, c, cluster_of, sq);
    benchmark::DoNotOptimize(cluster_of.data());
  }
}

template <bool Parallel>
void BM_UpdateCentroids(benchmark::State& state) {
  nevsm::parallel::ScopedThreadCount threads(static_cast<int>(state.range(0)));
  const auto& p = points();
  const auto k = static_cast<std::size_t>(state.range(1));
  std::vector<std::uint32_t> cluster_of(p.unit.size());
  for (std::size_t i = 0; i < cluster_of.size(); ++i) cluster_of[i] = static_cast<std::uint32_t>(i % k);
  nevsm::CentroidSet c(k, p.dim);
  for (auto _ : state) {
    if (Parallel)
      nevsm::omp::update_centroids(p.unit, cluster_of, c);
    else
      nevsm::serial::update_centroids(p.unit, cluster_of, c);
    benchmark::DoNotOptimize(c);
  }
}

void BM_TuneSweep(benchmark::State& state) {
  nevsm::parallel::ScopedThreadCount threads(static_cast<int>(state.range(0)));
  static const auto s = nevsm::gen_synthetic({3, 20, 10, 0.1, 7});
  const auto model = nevsm::build_space_model(s.corpus, FeatureSpace::Type, s.kb);
  std::vector<nevsm::LabelSet> labels;
  for (const auto& v : model.vectors) labels.push_back(nevsm::doc_label(v, model.index, 0.4));
  const auto range = nevsm::default_k_range(model.vectors.size(), 20);
  for (auto _ : state) {
    auto r = nevsm::tune_k(model.vectors, labels, range, {});
    benchmark::DoNotOptimize(r.best_k);
  }
}

}  // namespace

BENCHMARK(BM_CountTerms<false>)->Arg(1)->Name("count_terms/serial");
BENCHMARK(BM_CountTerms<true>)->Arg(2)->Arg(4)->Name("count_terms/omp");
BENCHMARK(BM_Vectorize<false>)->Arg(1)->Name("vectorize_all/serial");
BENCHMARK(BM_Vectorize<true>)->Arg(2)->Arg(4)->Name("vectorize_all/omp");
BENCHMARK(BM_NearestCentroids<false>)->Args({1, 8})->Args({1, 32})->Name("nearest_centroids/serial");
BENCHMARK(BM_NearestCentroids<true>)->Args({4, 8})->Args({4, 32})->Name("nearest_centroids/omp");
BENCHMARK(BM_UpdateCentroids<false>)->Args({1, 8})->Args({1, 32})->Name("update_centroids/serial");
BENCHMARK(BM_UpdateCentroids<true>)->Args({4, 8})->Args({4, 32})->Name("update_centroids/omp");
BENCHMARK(BM_TuneSweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->Name("tune_k/threads");

BENCHMARK_MAIN();
