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

#include "nevsm/vsm.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>

#include <fmt/core.h>

#include "nevsm/error.hpp"
#include "nevsm/kernels.hpp"
#include "nevsm/parallel.hpp"

namespace nevsm {

TermCounts term_occurrences(const Document& doc, FeatureSpace space,
                            const KnowledgeBase& kb) {
  static const std::vector<std::string> kNoTypes;
  TermCounts out;
  for (const auto& a : doc.annotations) {
    std::vector<std::string> names;
    if (a.entity_id) {
      names = kb.names_of(*a.entity_id);
      if (std::find(names.begin(), names.end(), a.name) == names.end())
        names.push_back(a.name);
    } else {
      names.push_back(a.name);
    }
    const auto& types =
        a.entity_type ? kb.supertypes_of(*a.entity_type) : kNoTypes;

    switch (space) {
      case FeatureSpace::Name:
        for (const auto& n : names) ++out[Term::name(n)];
        break;
      case FeatureSpace::Type:
        for (const auto& t : types) ++out[Term::type(t)];
        break;
      case FeatureSpace::NameType:
        for (const auto& n : names)
          for (const auto& t : types) ++out[Term::name_type(n, t)];
        break;
      case FeatureSpace::Identifier:
        if (a.entity_id) ++out[Term::identifier(*a.entity_id)];
        break;
    }
  }
  return out;
}

TermIndex TermIndex::build(FeatureSpace space,
                           std::span<const TermCounts> docs) {
  std::map<Term, std::uint32_t> df;
  for (const auto& counts : docs) {
    for (const auto& [term, freq] : counts) {
      if (term.space() != space)
        throw InvalidArgument(fmt::format("term '{}' is not in space {}",
                                          term.key(), to_string(space)));
      ++df[term];
    }
  }
  TermIndex idx;
  idx.space_ = space;
  idx.corpus_size_ = docs.size();
  idx.terms_.reserve(df.size());
  idx.doc_freq_.reserve(df.size());
  for (auto& [term, n] : df) {
    idx.lookup_.emplace(term, static_cast<std::uint32_t>(idx.terms_.size()));
    idx.terms_.push_back(term);
    idx.doc_freq_.push_back(n);
  }
  return idx;
}

double TermIndex::idf(std::uint32_t dim) const {
  return std::log(static_cast<double>(corpus_size_) /
                  static_cast<double>(doc_freq_.at(dim)));
}

std::optional<std::uint32_t> TermIndex::find(const Term& t) const {
  auto it = lookup_.find(t);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

TermIndex build_index(const Corpus& corpus, FeatureSpace space,
                      const KnowledgeBase& kb) {
  const auto counts = count_terms(corpus, space, kb);
  return TermIndex::build(space, counts);
}

SparseVector SparseVector::from_entries(FeatureSpace space,
                                        std::vector<SparseEntry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.dim < b.dim; });
  SparseVector v(space);
  v.entries_.reserve(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    if (!std::isfinite(e.weight) || e.weight < 0.0)
      throw InvalidArgument(
          fmt::format("weight {} at dimension {} is not a nonnegative number",
                      e.weight, e.dim));
    if (i > 0 && entries[i - 1].dim == e.dim)
      throw InvalidArgument(fmt::format("dimension {} repeated", e.dim));
    if (e.weight > 0.0) v.entries_.push_back(e);
  }
  return v;
}

double SparseVector::squared_norm() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.weight * e.weight;
  return s;
}

double SparseVector::norm() const { return std::sqrt(squared_norm()); }

double SparseVector::sum() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.weight;
  return s;
}

double SparseVector::weight(std::uint32_t dim) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), dim,
      [](const SparseEntry& e, std::uint32_t d) { return e.dim < d; });
  return it != entries_.end() && it->dim == dim ? it->weight : 0.0;
}

SparseVector SparseVector::scaled(double factor) const {
  if (!(factor > 0.0) || !std::isfinite(factor))
    throw InvalidArgument("scale factor must be positive and finite");
  SparseVector out(space_);
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.weight *= factor;
  std::erase_if(out.entries_, [](const SparseEntry& e) { return e.weight == 0.0; });
  return out;
}

SparseVector SparseVector::normalized() const {
  const double n = norm();
  SparseVector out(space_);
  if (n == 0.0) return out;
  out.entries_ = entries_;
  for (auto& e : out.entries_) e.weight /= n;
  return out;
}

double dot(const SparseVector& a, const SparseVector& b) {
  const auto& x = a.entries();
  const auto& y = b.entries();
  double s = 0.0;
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i].dim < y[j].dim) {
      ++i;
    } else if (y[j].dim < x[i].dim) {
      ++j;
    } else {
      s += x[i].weight * y[j].weight;
      ++i;
      ++j;
    }
  }
  return s;
}

double cosine(const SparseVector& a, const SparseVector& b) {
  if (a.space() != b.space())
    throw InvalidArgument(fmt::format("cosine across spaces {} and {}",
                                      to_string(a.space()), to_string(b.space())));
  const double na = a.squared_norm();
  const double nb = b.squared_norm();
  if (na == 0.0 || nb == 0.0) return 0.0;
  const double c = dot(a, b) / (std::sqrt(na) * std::sqrt(nb));
  return std::clamp(c, 0.0, 1.0);
}

std::vector<SparseEntry> term_frequencies(const TermCounts& counts,
                                          const TermIndex& index) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> present;
  std::uint32_t max_freq = 0;
  for (const auto& [term, freq] : counts) {
    if (auto dim = index.find(term)) {
      present.emplace_back(*dim, freq);
      max_freq = std::max(max_freq, freq);
    }
  }
  std::sort(present.begin(), present.end());
  std::vector<SparseEntry> tf;
  tf.reserve(present.size());
  for (const auto& [dim, freq] : present)
    tf.push_back({dim, static_cast<double>(freq) / static_cast<double>(max_freq)});
  return tf;
}

SparseVector vectorize(const TermCounts& counts, const TermIndex& index) {
  auto entries = term_frequencies(counts, index);
  for (auto& e : entries) e.weight *= index.idf(e.dim);
  return SparseVector::from_entries(index.space(), std::move(entries));
}

SparseVector vectorize(const Document& doc, const TermIndex& index,
                       const KnowledgeBase& kb) {
  return vectorize(term_occurrences(doc, index.space(), kb), index);
}

double doc_similarity(const DocumentVectors& a, const DocumentVectors& b,
                      const SpaceWeights& weights) {
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w))
      throw InvalidArgument("space weights must be nonnegative");
    total += w;
  }
  if (total <= 0.0) throw InvalidArgument("space weights are all zero");

  double num = 0.0, den = 0.0;
  for (auto s : kFeatureSpaces) {
    const auto i = space_index(s);
    if (a[i].empty() || b[i].empty()) continue;
    num += weights[i] * cosine(a[i], b[i]);
    den += weights[i];
  }
  return den > 0.0 ? num / den : 0.0;
}

std::vector<TermCounts> count_terms(const Corpus& corpus, FeatureSpace space,
                                    const KnowledgeBase& kb) {
  return parallel::enabled() ? omp::count_terms(corpus.documents, space, kb)
                             : serial::count_terms(corpus.documents, space, kb);
}

SpaceModel build_space_model(FeatureSpace space,
                             std::span<const TermCounts> counts) {
  SpaceModel model;
  model.index = TermIndex::build(space, counts);
  model.vectors = parallel::enabled() ? omp::vectorize_all(counts, model.index)
                                      : serial::vectorize_all(counts, model.index);
  return model;
}

SpaceModel build_space_model(const Corpus& corpus, FeatureSpace space,
                             const KnowledgeBase& kb) {
  const auto counts = count_terms(corpus, space, kb);
  return build_space_model(space, counts);
}

}  // namespace nevsm
