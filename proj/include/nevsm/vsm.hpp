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

#ifndef NEVSM_VSM_HPP_
#define NEVSM_VSM_HPP_

// tf.idf vector space model over named-entity feature spaces.
//
// A document occurs under a term when (per space):
//   Name        its appearing name, or any name of its identified entity;
//   Type        its recognized type or any supertype of it;
//   NameType    any (name, type) in the product of the two sets above;
//   Identifier  its entity identifier.
// Every annotation contributes once to each term it emits, so raw
// frequencies count mentions.
//
//   tf  = freq / max freq over the document's in-vocabulary terms
//   idf = ln(N / n_i)
//   w   = tf * idf

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "nevsm/corpus.hpp"
#include "nevsm/ontology.hpp"
#include "nevsm/term.hpp"

namespace nevsm {

TermCounts term_occurrences(const Document& doc, FeatureSpace space,
                            const KnowledgeBase& kb);

// Vocabulary of one feature space with document frequencies. Dimension i
// is the i-th term in sorted order.
class TermIndex {
 public:
  TermIndex() = default;

  static TermIndex build(FeatureSpace space, std::span<const TermCounts> docs);

  FeatureSpace space() const { return space_; }
  std::size_t size() const { return terms_.size(); }
  std::size_t corpus_size() const { return corpus_size_; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& term(std::uint32_t dim) const { return terms_.at(dim); }
  std::uint32_t doc_freq(std::uint32_t dim) const { return doc_freq_.at(dim); }
  double idf(std::uint32_t dim) const;
  std::optional<std::uint32_t> find(const Term& t) const;

 private:
  FeatureSpace space_ = FeatureSpace::Name;
  std::vector<Term> terms_;
  std::vector<std::uint32_t> doc_freq_;
  std::size_t corpus_size_ = 0;
  std::map<Term, std::uint32_t> lookup_;
};

TermIndex build_index(const Corpus& corpus, FeatureSpace space,
                      const KnowledgeBase& kb);

struct SparseEntry {
  std::uint32_t dim;
  double weight;

  bool operator==(const SparseEntry&) const = default;
};

// Nonnegative sparse vector; entries sorted by dimension, no zeros stored.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(FeatureSpace space) : space_(space) {}

  // Sorts by dimension and drops zero weights. Throws InvalidArgument on
  // negative or non-finite weights and on repeated dimensions.
  static SparseVector from_entries(FeatureSpace space,
                                   std::vector<SparseEntry> entries);

  FeatureSpace space() const { return space_; }
  const std::vector<SparseEntry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }

  // Reductions run in ascending dimension order.
  double squared_norm() const;
  double norm() const;
  double sum() const;
  double weight(std::uint32_t dim) const;

  SparseVector scaled(double factor) const;
  // Unit-length copy; the zero vector stays zero.
  SparseVector normalized() const;

  bool operator==(const SparseVector&) const = default;

 private:
  FeatureSpace space_ = FeatureSpace::Name;
  std::vector<SparseEntry> entries_;
};

double dot(const SparseVector& a, const SparseVector& b);

// In [0, 1]; 0 when either vector is zero. Throws InvalidArgument when the
// spaces differ.
double cosine(const SparseVector& a, const SparseVector& b);

// Normalized frequencies (dim, tf) of the document's in-vocabulary terms,
// ascending by dimension. Terms missing from the index are dropped before
// the maximum is taken.
std::vector<SparseEntry> term_frequencies(const TermCounts& counts,
                                          const TermIndex& index);

SparseVector vectorize(const TermCounts& counts, const TermIndex& index);
SparseVector vectorize(const Document& doc, const TermIndex& index,
                       const KnowledgeBase& kb);

// The four per-space vectors of one document, indexed by space_index().
using DocumentVectors = std::array<SparseVector, 4>;
using SpaceWeights = std::array<double, 4>;

// Weighted mean of per-space cosines over the spaces where both documents
// are nonzero; 0 when there is no such space.
double doc_similarity(const DocumentVectors& a, const DocumentVectors& b,
                      const SpaceWeights& weights);

// Index plus one vector per document for a single space.
struct SpaceModel {
  TermIndex index;
  std::vector<SparseVector> vectors;
};

// Per-document occurrence counting for a whole corpus.
std::vector<TermCounts> count_terms(const Corpus& corpus, FeatureSpace space,
                                    const KnowledgeBase& kb);
SpaceModel build_space_model(FeatureSpace space,
                             std::span<const TermCounts> counts);
SpaceModel build_space_model(const Corpus& corpus, FeatureSpace space,
                             const KnowledgeBase& kb);

}  // namespace nevsm

#endif  // NEVSM_VSM_HPP_
