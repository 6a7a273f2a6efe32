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

#ifndef NEVSM_REPORT_HPP_
#define NEVSM_REPORT_HPP_

// Serialized outputs: the cluster report (JSON), its static HTML view,
// the k-sweep CSV, and per-document vector dumps. All floats are written
// with 17 significant digits.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "nevsm/corpus.hpp"
#include "nevsm/evaluate.hpp"
#include "nevsm/hierarchy.hpp"
#include "nevsm/vsm.hpp"

namespace nevsm {

using ordered_json = nlohmann::ordered_json;

// Placeholder for a double inside a JSON tree; dump_json() writes it as a
// bare number with 17 significant digits.
ordered_json number17(double x);
std::string format17(double x);

// Compact one-line dump with number17 placeholders expanded.
std::string dump_json(const ordered_json& j);
// Same, indented.
std::string dump_json_pretty(const ordered_json& j);

// Echo of the settings that determine a clustering result. Output paths
// and thread counts are deliberately absent: they do not affect results.
struct RunEcho {
  std::string kb_path;
  std::string corpus_path;
  std::vector<PhaseConfig> phases;
  ClusterConfig config;
};

ordered_json entropy_json(const EntropyReport& r);
ordered_json cluster_report(const HierarchyResult& result, const Corpus& corpus,
                            const RunEcho& echo);

// Node caption, e.g. "Category1,Category1Kind2 (Size=20)".
std::string node_caption(const ordered_json& node);
// Static nested-list page; a pure function of the report.
std::string render_html(const ordered_json& report);

std::string tune_csv(std::span<const EntropyReport> table);
ordered_json tune_summary(FeatureSpace space, const TuneResult& result,
                          std::span<const std::size_t> k_range, double alpha);

// {"doc_id":..,"space":..,"weights":{term-key: weight}}
std::string vector_line(const std::string& doc_id, const SparseVector& v,
                        const TermIndex& index);

}  // namespace nevsm

#endif  // NEVSM_REPORT_HPP_
