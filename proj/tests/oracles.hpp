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

#ifndef NEVSM_TESTS_ORACLES_HPP_
#define NEVSM_TESTS_ORACLES_HPP_

// Reference computations written straight from the definitions, sharing
// no code with the library paths they check.

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace nevsm::oracle {

// Ec and El via the per-document form: each document contributes
// -log2(share of its own class in its cluster) (resp. of its own cluster
// within its class), averaged over N. Counts come from full scans.
struct Entropies {
  double cluster = 0.0;
  double klass = 0.0;
};

inline Entropies entropies(const std::vector<int>& cluster,
                           const std::vector<int>& klass) {
  const std::size_t n = cluster.size();
  Entropies e;
  if (n == 0) return e;
  for (std::size_t d = 0; d < n; ++d) {
    double same_cluster = 0, same_both = 0, same_class = 0;
    for (std::size_t o = 0; o < n; ++o) {
      if (cluster[o] == cluster[d]) ++same_cluster;
      if (klass[o] == klass[d]) ++same_class;
      if (cluster[o] == cluster[d] && klass[o] == klass[d]) ++same_both;
    }
    e.cluster -= std::log2(same_both / same_cluster);
    e.klass -= std::log2(same_both / same_class);
  }
  e.cluster /= static_cast<double>(n);
  e.klass /= static_cast<double>(n);
  return e;
}

using Dense = std::vector<double>;

inline Dense unit(Dense v) {
  double s = 0;
  for (double x : v) s += x * x;
  s = std::sqrt(s);
  for (double& x : v) x /= s;
  return v;
}

// Within-cluster sum of squared distances to the arithmetic means.
inline double sse(const std::vector<Dense>& pts, const std::vector<int>& part, int k) {
  const std::size_t dim = pts.front().size();
  double total = 0;
  for (int c = 0; c < k; ++c) {
    Dense mean(dim, 0.0);
    int n = 0;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (part[i] == c) {
        ++n;
        for (std::size_t j = 0; j < dim; ++j) mean[j] += pts[i][j];
      }
    if (n == 0) continue;
    for (double& m : mean) m /= n;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (part[i] == c)
        for (std::size_t j = 0; j < dim; ++j)
          total += (pts[i][j] - mean[j]) * (pts[i][j] - mean[j]);
  }
  return total;
}

// Minimum SSE over all partitions of unit(pts) into two nonempty sets.
struct Bipartition {
  double sse = std::numeric_limits<double>::infinity();
  std::vector<int> part;
  std::size_t count = 0;
};

inline Bipartition best_bipartition(const std::vector<Dense>& raw) {
  std::vector<Dense> pts;
  for (const auto& p : raw) pts.push_back(unit(p));
  const std::size_t n = pts.size();
  Bipartition best;
  // Point n-1 always on side 1; masks over the rest, excluding all-ones.
  for (std::uint32_t mask = 0; mask + 1 < (1u << (n - 1)); ++mask) {
    std::vector<int> part(n, 1);
    for (std::size_t i = 0; i + 1 < n; ++i) part[i] = (mask >> i) & 1u;
    ++best.count;
    const double s = sse(pts, part, 2);
    if (s < best.sse) {
      best.sse = s;
      best.part = part;
    }
  }
  return best;
}

// Hand-derived tf.idf weights of the four-document fixture
// (data/sample_corpus.jsonl), N = 4.
struct ExpectedWeight {
  const char* doc;
  const char* space;
  const char* key;
  double weight;
};

inline std::vector<ExpectedWeight> fixture_weights() {
  const double ln2 = std::log(4.0 / 2.0);
  const double ln4 = std::log(4.0 / 1.0);
  return {
      // Name: d1 {Gruzia:1, Georgia:1, Shenyang:2}, d2 {Shenyang:1,
      // Liaoning:1}, d3 {Changbai:2}; n(Shenyang) = 2, others 1.
      {"d1", "name", "Gruzia", 0.5 * ln4},
      {"d1", "name", "Georgia", 0.5 * ln4},
      {"d1", "name", "Shenyang", 1.0 * ln2},
      {"d2", "name", "Shenyang", 1.0 * ln2},
      {"d2", "name", "Liaoning", 1.0 * ln4},
      {"d3", "name", "Changbai", 1.0 * ln4},
      // Type: d1 {Country:1, City:2, Location:3, Thing:3} (max 3),
      // d2 {City:1, Location:2, Thing:2} (max 2); n(Country) = 1, rest 2.
      {"d1", "type", "Country", (1.0 / 3.0) * ln4},
      {"d1", "type", "City", (2.0 / 3.0) * ln2},
      {"d1", "type", "Location", 1.0 * ln2},
      {"d1", "type", "Thing", 1.0 * ln2},
      {"d2", "type", "City", 0.5 * ln2},
      {"d2", "type", "Location", 1.0 * ln2},
      {"d2", "type", "Thing", 1.0 * ln2},
      // NameType: d1 names x chains, Shenyang pairs twice (max 2);
      // d2 one each (max 1); Shenyang pairs in 2 documents.
      {"d1", "nametype", "Gruzia|Country", 0.5 * ln4},
      {"d1", "nametype", "Gruzia|Location", 0.5 * ln4},
      {"d1", "nametype", "Gruzia|Thing", 0.5 * ln4},
      {"d1", "nametype", "Georgia|Country", 0.5 * ln4},
      {"d1", "nametype", "Georgia|Location", 0.5 * ln4},
      {"d1", "nametype", "Georgia|Thing", 0.5 * ln4},
      {"d1", "nametype", "Shenyang|City", 1.0 * ln2},
      {"d1", "nametype", "Shenyang|Location", 1.0 * ln2},
      {"d1", "nametype", "Shenyang|Thing", 1.0 * ln2},
      {"d2", "nametype", "Shenyang|City", 1.0 * ln2},
      {"d2", "nametype", "Shenyang|Location", 1.0 * ln2},
      {"d2", "nametype", "Shenyang|Thing", 1.0 * ln2},
      {"d2", "nametype", "Liaoning|Location", 1.0 * ln4},
      {"d2", "nametype", "Liaoning|Thing", 1.0 * ln4},
      // Identifier: d1 {#C1:1, #S1:2}, d2 {#S1:1}; n(#S1) = 2.
      {"d1", "identifier", "#C1", 0.5 * ln4},
      {"d1", "identifier", "#S1", 1.0 * ln2},
      {"d2", "identifier", "#S1", 1.0 * ln2},
  };
}

}  // namespace nevsm::oracle

#endif  // NEVSM_TESTS_ORACLES_HPP_
