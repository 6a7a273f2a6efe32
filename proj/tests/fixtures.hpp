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

#ifndef NEVSM_TESTS_FIXTURES_HPP_
#define NEVSM_TESTS_FIXTURES_HPP_

#include <algorithm>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "nevsm/corpus.hpp"
#include "nevsm/hierarchy.hpp"
#include "nevsm/ontology.hpp"
#include "nevsm/rng.hpp"
#include "nevsm/synthetic.hpp"

namespace nevsm::testing {

inline std::string data_path(const std::string& name) {
  return std::string(NEVSM_DATA_DIR) + "/" + name;
}

inline KnowledgeBase sample_kb() { return load_kb_file(data_path("sample_kb.json")); }

// d1..d4: the hand-checked four-document fixture.
inline Corpus sample_corpus(const KnowledgeBase& kb) {
  return load_corpus_file(data_path("sample_corpus.jsonl"), kb);
}

inline KnowledgeBase kb_from_text(const std::string& text) {
  std::istringstream in(text);
  return load_kb(in);
}

inline Corpus corpus_from_text(const std::string& text, const KnowledgeBase& kb) {
  std::istringstream in(text);
  return load_corpus(in, kb);
}

inline Document doc_from_text(const std::string& line, const KnowledgeBase& kb) {
  return parse_document(nlohmann::json::parse(line), kb);
}

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("nevsm_" + tag + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

// Fraction of documents whose predicted cluster maps to their true class
// under a one-to-one matching built greedily from the largest overlaps.
inline double agreement(const std::vector<std::string>& predicted,
                        const std::vector<std::string>& truth) {
  std::map<std::pair<std::string, std::string>, std::size_t> overlap;
  for (std::size_t i = 0; i < predicted.size(); ++i)
    ++overlap[{predicted[i], truth[i]}];
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> cells;
  for (const auto& [key, n] : overlap) cells.push_back({n, key});
  std::stable_sort(cells.begin(), cells.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  std::map<std::string, bool> used_pred, used_truth;
  std::size_t matched = 0;
  for (const auto& [n, key] : cells) {
    if (used_pred[key.first] || used_truth[key.second]) continue;
    used_pred[key.first] = used_truth[key.second] = true;
    matched += n;
  }
  return predicted.empty() ? 1.0
                           : static_cast<double>(matched) / static_cast<double>(predicted.size());
}

// Leaf id of every document.
inline std::vector<std::string> leaf_of(const ClusterNode& root, std::size_t n) {
  std::vector<std::string> out(n);
  for (const auto* leaf : leaves(root))
    for (auto d : leaf->docs) out[d] = leaf->cluster_id;
  return out;
}

// True when every internal node's children partition its documents and
// child depth is parent depth + 1.
inline bool partitions_exactly(const ClusterNode& node) {
  if (node.is_leaf()) return true;
  std::vector<std::size_t> merged;
  for (const auto& c : node.children) {
    if (c.depth != node.depth + 1 || c.docs.empty()) return false;
    merged.insert(merged.end(), c.docs.begin(), c.docs.end());
    if (!partitions_exactly(c)) return false;
  }
  std::sort(merged.begin(), merged.end());
  return merged == node.docs;
}

// Random document over the sample KB mixing all three annotation forms,
// including alias surface names.
inline Document random_sample_doc(SeededRng& rng, const KnowledgeBase& kb,
                                  std::size_t id) {
  static const std::vector<std::string> kFreeNames = {"Changbai", "Liaoning", "Beijing"};
  static const std::vector<std::string> kTypes = {"Thing", "Location", "City", "Country"};
  static const std::vector<std::string> kIds = {"#C1", "#S1"};
  Document d;
  d.doc_id = "r" + std::to_string(id);
  const std::size_t n = rng.index(8);
  for (std::size_t i = 0; i < n; ++i) {
    Annotation a;
    switch (rng.index(3)) {
      case 0:
        a.name = kFreeNames[rng.index(kFreeNames.size())];
        break;
      case 1:
        a.name = kFreeNames[rng.index(kFreeNames.size())];
        a.entity_type = kTypes[rng.index(kTypes.size())];
        break;
      default: {
        const auto& id_ = kIds[rng.index(kIds.size())];
        const auto names = kb.names_of(id_);
        a.name = names[rng.index(names.size())];
        a.entity_id = id_;
      }
    }
    normalize_annotation(a, kb);
    d.annotations.push_back(std::move(a));
  }
  return d;
}

}  // namespace nevsm::testing

#endif  // NEVSM_TESTS_FIXTURES_HPP_
