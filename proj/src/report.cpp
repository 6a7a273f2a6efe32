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

#include "nevsm/report.hpp"

#include <string_view>

#include <fmt/core.h>

namespace nevsm {

namespace {

// Strings starting with this control character carry a preformatted
// number. It is escaped as \u001f by the serializer.
constexpr char kNumberMark = '\x1f';
constexpr std::string_view kEscapedMark = "\"\\u001f";

std::string expand_numbers(std::string text) {
  std::string out;
  out.reserve(text.size());
  std::size_t pos = 0;
  while (true) {
    auto hit = text.find(kEscapedMark, pos);
    if (hit == std::string::npos) break;
    out.append(text, pos, hit - pos);
    const auto start = hit + kEscapedMark.size();
    const auto close = text.find('"', start);
    out.append(text, start, close - start);
    pos = close + 1;
  }
  out.append(text, pos, std::string::npos);
  return out;
}

std::string html_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Accepts both an in-memory placeholder and a parsed number, so the page
// renders the same from a live report and from one read back from disk.
std::string display_number(const ordered_json& v) {
  if (v.is_string()) return v.get<std::string>().substr(1);
  return format17(v.get<double>());
}

ordered_json trace_json(const std::vector<double>& xs) {
  ordered_json arr = ordered_json::array();
  for (double x : xs) arr.push_back(number17(x));
  return arr;
}

ordered_json node_json(const ClusterNode& node, const Corpus& corpus) {
  ordered_json j = ordered_json::object();
  j["cluster_id"] = node.cluster_id;
  j["phase_space"] = node.phase_space
                         ? ordered_json(std::string(to_string(*node.phase_space)))
                         : ordered_json(nullptr);
  j["depth"] = node.depth;
  j["size"] = node.docs.size();
  ordered_json label = ordered_json::array();
  for (const auto& t : node.label) label.push_back(t.key());
  j["label"] = std::move(label);
  ordered_json ids = ordered_json::array();
  for (auto d : node.docs) ids.push_back(corpus.documents[d].doc_id);
  j["doc_ids"] = std::move(ids);
  ordered_json children = ordered_json::array();
  for (const auto& c : node.children) children.push_back(node_json(c, corpus));
  j["children"] = std::move(children);
  return j;
}

void html_node(const ordered_json& node, std::string& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  out += pad + "<li>";
  out += "<span class=\"node\" title=\"" +
         html_escape(node["cluster_id"].get<std::string>()) + "\">" +
         html_escape(node_caption(node)) + "</span>";
  const auto& children = node["children"];
  if (children.empty()) {
    out += "\n" + pad + "  <div class=\"docs\">";
    bool first = true;
    for (const auto& id : node["doc_ids"]) {
      if (!first) out += ", ";
      first = false;
      out += html_escape(id.get<std::string>());
    }
    out += "</div>\n" + pad + "</li>\n";
    return;
  }
  out += "\n" + pad + "  <ul>\n";
  for (const auto& c : children) html_node(c, out, indent + 4);
  out += pad + "  </ul>\n" + pad + "</li>\n";
}

}  // namespace

std::string format17(double x) { return fmt::format("{:.17g}", x); }

ordered_json number17(double x) {
  return ordered_json(std::string(1, kNumberMark) + format17(x));
}

std::string dump_json(const ordered_json& j) { return expand_numbers(j.dump()); }

std::string dump_json_pretty(const ordered_json& j) {
  return expand_numbers(j.dump(2));
}

ordered_json entropy_json(const EntropyReport& r) {
  ordered_json j = ordered_json::object();
  j["k"] = r.k;
  j["alpha"] = number17(r.alpha);
  j["cluster_entropy"] = number17(r.cluster_entropy);
  j["class_entropy"] = number17(r.class_entropy);
  j["overall_entropy"] = number17(r.overall);
  return j;
}

ordered_json cluster_report(const HierarchyResult& result, const Corpus& corpus,
                            const RunEcho& echo) {
  ordered_json cfg = ordered_json::object();
  cfg["kb"] = echo.kb_path;
  cfg["corpus"] = echo.corpus_path;
  ordered_json phases = ordered_json::array();
  ordered_json ks = ordered_json::array();
  for (const auto& p : echo.phases) {
    phases.push_back(std::string(to_string(p.space)));
    ks.push_back(p.k ? ordered_json(*p.k) : ordered_json("auto"));
  }
  cfg["phases"] = std::move(phases);
  cfg["k"] = std::move(ks);
  cfg["alpha"] = number17(echo.config.alpha);
  cfg["tc"] = number17(echo.config.tc_fraction);
  cfg["seed"] = echo.config.seed;
  cfg["restarts"] = echo.config.restarts;
  cfg["max_iterations"] = echo.config.max_iterations;
  cfg["min_split_size"] = echo.config.min_split_size;
  cfg["rescope_idf"] = echo.config.rescope_idf;

  ordered_json report = ordered_json::object();
  report["config"] = std::move(cfg);
  report["documents"] = corpus.size();
  report["tree"] = node_json(result.root, corpus);

  ordered_json phase_list = ordered_json::array();
  for (const auto& pr : result.phases) {
    ordered_json p = ordered_json::object();
    p["space"] = std::string(to_string(pr.space));
    p["entropy"] = entropy_json(pr.entropy);
    ordered_json splits = ordered_json::array();
    for (const auto& s : pr.splits) {
      ordered_json sj = ordered_json::object();
      sj["node"] = s.node_id;
      sj["k"] = s.k;
      sj["auto_k"] = s.auto_k;
      sj["objective_trace"] = trace_json(s.objective_trace);
      sj["sse_trace"] = trace_json(s.sse_trace);
      if (s.auto_k) {
        ordered_json rows = ordered_json::array();
        for (const auto& r : s.tune_table) rows.push_back(entropy_json(r));
        sj["tune"] = std::move(rows);
      }
      splits.push_back(std::move(sj));
    }
    p["splits"] = std::move(splits);
    phase_list.push_back(std::move(p));
  }
  report["phases"] = std::move(phase_list);
  return report;
}

std::string node_caption(const ordered_json& node) {
  std::string label;
  if (node["cluster_id"] == "root") {
    label = "All documents";
  } else if (node["label"].empty()) {
    label = kBottomLabel;
  } else {
    for (const auto& t : node["label"]) {
      if (!label.empty()) label += ',';
      label += t.get<std::string>();
    }
  }
  return fmt::format("{} (Size={})", label, node["size"].get<std::size_t>());
}

std::string render_html(const ordered_json& report) {
  std::string out;
  out += "<!DOCTYPE html>\n<html>\n<head>\n<meta charset=\"utf-8\">\n";
  out += "<title>Document clusters</title>\n";
  out += "<style>\nbody { font-family: sans-serif; }\n"
         ".docs { color: #666; font-size: smaller; }\n"
         "td, th { padding: 2px 8px; text-align: right; }\n</style>\n";
  out += "</head>\n<body>\n<h1>Document clusters</h1>\n";

  std::string phases;
  for (const auto& p : report["phases"]) {
    if (!phases.empty()) phases += ", ";
    phases += p["space"].get<std::string>();
  }
  out += fmt::format("<p>{} documents; phases: {}</p>\n",
                     report["documents"].get<std::size_t>(), html_escape(phases));

  out += "<ul>\n";
  html_node(report["tree"], out, 2);
  out += "</ul>\n";

  out += "<h2>Entropy per phase</h2>\n<table>\n"
         "<tr><th>phase</th><th>space</th><th>clusters</th>"
         "<th>cluster entropy</th><th>class entropy</th>"
         "<th>overall entropy</th></tr>\n";
  std::size_t n = 0;
  for (const auto& p : report["phases"]) {
    const auto& e = p["entropy"];
    out += fmt::format(
        "<tr><td>{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td><td>{}</td></tr>\n",
        ++n, html_escape(p["space"].get<std::string>()), e["k"].get<std::size_t>(),
        display_number(e["cluster_entropy"]), display_number(e["class_entropy"]),
        display_number(e["overall_entropy"]));
  }
  out += "</table>\n</body>\n</html>\n";
  return out;
}

std::string tune_csv(std::span<const EntropyReport> table) {
  std::string out = "k,cluster_entropy,class_entropy,overall_entropy\n";
  for (const auto& r : table)
    out += fmt::format("{},{},{},{}\n", r.k, format17(r.cluster_entropy),
                       format17(r.class_entropy), format17(r.overall));
  return out;
}

ordered_json tune_summary(FeatureSpace space, const TuneResult& result,
                          std::span<const std::size_t> k_range, double alpha) {
  ordered_json j = ordered_json::object();
  j["feature"] = std::string(to_string(space));
  j["alpha"] = number17(alpha);
  j["k_range"] = std::vector<std::size_t>(k_range.begin(), k_range.end());
  j["best_k"] = result.best_k;
  for (const auto& r : result.table)
    if (r.k == result.best_k) j["best"] = entropy_json(r);
  return j;
}

std::string vector_line(const std::string& doc_id, const SparseVector& v,
                        const TermIndex& index) {
  ordered_json j = ordered_json::object();
  j["doc_id"] = doc_id;
  j["space"] = std::string(to_string(v.space()));
  ordered_json w = ordered_json::object();
  for (const auto& e : v.entries()) w[index.term(e.dim).key()] = number17(e.weight);
  j["weights"] = std::move(w);
  return dump_json(j);
}

}  // namespace nevsm
