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

#include "nevsm/cli.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <fmt/core.h>

#include "CLI11.hpp"
#include "nevsm/corpus.hpp"
#include "nevsm/error.hpp"
#include "nevsm/evaluate.hpp"
#include "nevsm/hierarchy.hpp"
#include "nevsm/ontology.hpp"
#include "nevsm/parallel.hpp"
#include "nevsm/report.hpp"
#include "nevsm/synthetic.hpp"
#include "nevsm/vsm.hpp"

namespace nevsm::cli {

namespace {

// Raised for bad flag values found after CLI11 has parsed the line.
struct UsageError : Error {
  using Error::Error;
};

// Wraps an error with the pipeline stage it came from.
struct StageError {
  std::string stage;
  std::string message;
  int code;
};

template <typename F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const IoError& e) {
    throw StageError{name, e.what(), kUsageError};
  } catch (const InvalidArgument& e) {
    throw StageError{name, e.what(), kUsageError};
  } catch (const UsageError& e) {
    throw StageError{name, e.what(), kUsageError};
  } catch (const Error& e) {
    throw StageError{name, e.what(), kDataError};
  }
}

std::size_t parse_count(std::string_view s) {
  std::size_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || s.empty())
    throw UsageError(fmt::format("'{}' is not a non-negative integer", s));
  return v;
}

std::vector<std::string_view> split_commas(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    auto c = s.find(',', pos);
    out.push_back(s.substr(pos, c - pos));
    if (c == std::string_view::npos) break;
    pos = c + 1;
  }
  return out;
}

std::vector<PhaseConfig> parse_phases(const std::string& phases,
                                      const std::string& ks) {
  std::vector<PhaseConfig> out;
  for (auto s : parse_feature_spaces(phases)) out.push_back({s, std::nullopt});
  auto kv = split_commas(ks);
  if (kv.size() != 1 && kv.size() != out.size())
    throw UsageError(fmt::format("--k has {} values for {} phases", kv.size(),
                                 out.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    auto v = kv.size() == 1 ? kv[0] : kv[i];
    if (v == "auto") continue;
    const auto k = parse_count(v);
    if (k == 0) throw UsageError("k must be positive");
    out[i].k = k;
  }
  return out;
}

// "a..b", "a,b,c" or "auto".
std::vector<std::size_t> parse_k_range(const std::string& text, std::size_t n,
                                       bool full) {
  if (full) {
    std::vector<std::size_t> r;
    for (std::size_t k = 1; k <= n; ++k) r.push_back(k);
    return r;
  }
  if (text == "auto") return default_k_range(n);
  std::vector<std::size_t> r;
  if (auto dots = text.find(".."); dots != std::string::npos) {
    const auto lo = parse_count(std::string_view(text).substr(0, dots));
    const auto hi = parse_count(std::string_view(text).substr(dots + 2));
    for (std::size_t k = lo; k <= hi; ++k) r.push_back(k);
  } else {
    for (auto v : split_commas(text)) r.push_back(parse_count(v));
  }
  if (r.empty()) throw UsageError(fmt::format("k range '{}' is empty", text));
  return r;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError(fmt::format("cannot write '{}'", path));
  f << content;
  if (!f) throw IoError(fmt::format("error writing '{}'", path));
}

struct CommonOptions {
  std::string kb;
  std::string corpus;
  int threads = 0;
};

struct ClusterOptions {
  std::string phases = "type";
  std::string k = "auto";
  double alpha = 0.5;
  double tc = 0.4;
  std::uint64_t seed = 42;
  std::size_t restarts = 4;
  std::size_t max_iter = 100;
  std::size_t min_split = 2;
  bool rescope_idf = false;
  std::string out;
  std::string html;
};

struct TuneCliOptions {
  std::string feature = "type";
  std::string k_range = "auto";
  bool full_range = false;
  double alpha = 0.5;
  double tc = 0.4;
  std::uint64_t seed = 42;
  std::size_t restarts = 4;
  std::size_t max_iter = 100;
  std::string out;
  std::string summary;
};

struct GenOptions {
  SyntheticParams params;
  SyntheticSchema schema;
  std::string out_kb;
  std::string out_corpus;
};

struct VectorizeOptions {
  std::string space = "all";
  std::string out;
};

void add_common(CLI::App* sub, CommonOptions& o, bool corpus_required) {
  sub->add_option("--kb", o.kb, "Knowledge base JSON file")->required();
  auto* c = sub->add_option("--corpus", o.corpus, "Corpus JSON-Lines file");
  if (corpus_required) c->required();
  sub->add_option("--threads", o.threads, "Worker cap (0 = all cores)")
      ->capture_default_str();
}

struct Loaded {
  KnowledgeBase kb;
  Corpus corpus;
};

Loaded load_inputs(const CommonOptions& o) {
  Loaded in;
  in.kb = stage("load_kb", [&] { return load_kb_file(o.kb); });
  in.corpus = stage("load_corpus", [&] { return load_corpus_file(o.corpus, in.kb); });
  if (in.corpus.size() == 0)
    throw StageError{"load_corpus", "corpus has no documents", kDataError};
  return in;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty())
    out << content;
  else
    stage("write_output", [&] { write_file(path, content); });
}

int cmd_cluster(const CommonOptions& common, const ClusterOptions& o,
                std::ostream& out) {
  auto phases = stage("config", [&] { return parse_phases(o.phases, o.k); });
  ClusterConfig cfg;
  cfg.seed = o.seed;
  cfg.max_iterations = o.max_iter;
  cfg.restarts = o.restarts;
  cfg.min_split_size = o.min_split;
  cfg.alpha = o.alpha;
  cfg.tc_fraction = o.tc;
  cfg.rescope_idf = o.rescope_idf;

  auto in = load_inputs(common);
  auto result = stage("cluster", [&] {
    return hierarchical_cluster(in.corpus, in.kb, phases, cfg);
  });
  const auto report =
      cluster_report(result, in.corpus, RunEcho{common.kb, common.corpus, phases, cfg});
  emit(o.out, dump_json_pretty(report) + "\n", out);
  if (!o.html.empty())
    stage("write_html", [&] { write_file(o.html, render_html(report)); });
  return kOk;
}

int cmd_tune(const CommonOptions& common, const TuneCliOptions& o,
             std::ostream& out, std::ostream& err) {
  const auto space = stage("config", [&] { return parse_feature_space(o.feature); });
  if (!(o.alpha >= 0.0 && o.alpha <= 1.0) || !(o.tc >= 0.0 && o.tc <= 1.0))
    throw StageError{"config", "alpha and tc must lie in [0, 1]", kUsageError};
  // Validate the range syntax before touching the inputs.
  if (!o.full_range && o.k_range != "auto")
    stage("config", [&] { return parse_k_range(o.k_range, 0, false); });

  auto in = load_inputs(common);
  const auto model = stage("vectorize", [&] {
    return build_space_model(in.corpus, space, in.kb);
  });
  const auto range = stage("config", [&] {
    return parse_k_range(o.k_range, in.corpus.size(), o.full_range);
  });
  std::vector<LabelSet> labels;
  for (const auto& v : model.vectors) labels.push_back(doc_label(v, model.index, o.tc));
  TuneOptions opts{o.alpha, o.restarts, o.seed, o.max_iter};
  const auto result = stage("tune", [&] {
    return tune_k(model.vectors, labels, range, opts);
  });

  emit(o.out, tune_csv(result.table), out);
  const auto summary = tune_summary(space, result, range, o.alpha);
  if (!o.summary.empty())
    stage("write_summary", [&] { write_file(o.summary, dump_json_pretty(summary) + "\n"); });
  err << "best_k=" << result.best_k << '\n';
  return kOk;
}

int cmd_gen(const GenOptions& o, std::ostream& out) {
  auto gen = stage("gen", [&] { return gen_synthetic(o.params, o.schema); });
  stage("write_kb", [&] { write_file(o.out_kb, kb_to_json(gen.kb).dump(2) + "\n"); });
  std::ostringstream corpus;
  write_corpus(corpus, gen.corpus);
  stage("write_corpus", [&] { write_file(o.out_corpus, corpus.str()); });

  out << fmt::format("generated {} documents in {} groups (seed {})\n",
                     gen.corpus.size(), o.params.groups, o.params.seed);
  std::map<std::string, std::map<std::string, std::size_t>> truth;
  for (const auto& d : gen.corpus.documents)
    ++truth[*d.group_truth][*d.identity_truth];
  for (const auto& [group, ids] : truth) {
    std::size_t total = 0;
    std::string detail;
    for (const auto& [id, n] : ids) {
      total += n;
      detail += fmt::format(" {}:{}", id, n);
    }
    out << fmt::format("  {}: {} documents;{}\n", group, total, detail);
  }
  return kOk;
}

int cmd_validate(const CommonOptions& common, std::ostream& out) {
  auto kb = stage("load_kb", [&] { return load_kb_file(common.kb); });
  std::size_t docs = 0;
  if (!common.corpus.empty())
    docs = stage("load_corpus", [&] { return load_corpus_file(common.corpus, kb); }).size();
  out << fmt::format("ok: {} types, {} entities", kb.hierarchy().size(),
                     kb.entity_count());
  if (!common.corpus.empty()) out << fmt::format(", {} documents", docs);
  out << '\n';
  return kOk;
}

int cmd_vectorize(const CommonOptions& common, const VectorizeOptions& o,
                  std::ostream& out) {
  std::vector<FeatureSpace> spaces;
  if (o.space == "all")
    spaces.assign(kFeatureSpaces.begin(), kFeatureSpaces.end());
  else
    spaces = stage("config", [&] { return parse_feature_spaces(o.space); });

  auto in = load_inputs(common);
  std::vector<SpaceModel> models;
  for (auto s : spaces)
    models.push_back(stage("vectorize", [&] { return build_space_model(in.corpus, s, in.kb); }));

  std::string text;
  for (std::size_t d = 0; d < in.corpus.size(); ++d)
    for (const auto& m : models)
      text += vector_line(in.corpus.documents[d].doc_id, m.vectors[d], m.index) + "\n";
  emit(o.out, text, out);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Named-entity document clustering", "nevsm"};
  app.require_subcommand(1);

  CommonOptions common;
  ClusterOptions cl;
  TuneCliOptions tu;
  GenOptions gen;
  VectorizeOptions vec;

  auto* cluster = app.add_subcommand("cluster", "Cluster a corpus into a hierarchy");
  add_common(cluster, common, true);
  cluster->add_option("--phases", cl.phases, "Comma-separated spaces: name|type|nametype|identifier")
      ->capture_default_str();
  cluster->add_option("--k", cl.k, "Per-phase k (comma-separated, 'auto' allowed)")
      ->capture_default_str();
  cluster->add_option("--alpha", cl.alpha, "Cluster-entropy weight in E")->capture_default_str();
  cluster->add_option("--tc", cl.tc, "Label threshold as a fraction of weight mass")
      ->capture_default_str();
  cluster->add_option("--seed", cl.seed)->capture_default_str();
  cluster->add_option("--restarts", cl.restarts)->capture_default_str();
  cluster->add_option("--max-iter", cl.max_iter)->capture_default_str();
  cluster->add_option("--min-split", cl.min_split, "Smallest node split by later phases")
      ->capture_default_str();
  cluster->add_flag("--rescope-idf", cl.rescope_idf, "Recompute idf inside each node");
  cluster->add_option("--out", cl.out, "JSON report path (default: stdout)");
  cluster->add_option("--html", cl.html, "Static HTML tree path");

  auto* tune = app.add_subcommand("tune", "Sweep k and report entropies");
  add_common(tune, common, true);
  tune->add_option("--feature", tu.feature, "Feature space")->capture_default_str();
  tune->add_option("--k-range", tu.k_range, "'a..b', 'a,b,c' or 'auto' (2..min(N,50))")
      ->capture_default_str();
  tune->add_flag("--full-range", tu.full_range, "Sweep every k in 1..N");
  tune->add_option("--alpha", tu.alpha)->capture_default_str();
  tune->add_option("--tc", tu.tc)->capture_default_str();
  tune->add_option("--seed", tu.seed)->capture_default_str();
  tune->add_option("--restarts", tu.restarts)->capture_default_str();
  tune->add_option("--max-iter", tu.max_iter)->capture_default_str();
  tune->add_option("--out", tu.out, "CSV path (default: stdout)");
  tune->add_option("--summary", tu.summary, "JSON summary path");

  auto* g = app.add_subcommand("gen", "Generate a synthetic KB and corpus");
  g->add_option("--groups", gen.params.groups)->capture_default_str();
  g->add_option("--docs-per-group", gen.params.docs_per_group)->capture_default_str();
  g->add_option("--mentions-per-doc", gen.params.mentions_per_doc)->capture_default_str();
  g->add_option("--noise", gen.params.noise_rate)->capture_default_str();
  g->add_option("--seed", gen.params.seed)->capture_default_str();
  g->add_option("--subtypes", gen.schema.subtypes_per_group)->capture_default_str();
  g->add_option("--identities", gen.schema.identities_per_group)->capture_default_str();
  g->add_option("--aliases", gen.schema.aliases_per_entity)->capture_default_str();
  g->add_option("--focus", gen.schema.focus_rate)->capture_default_str();
  g->add_option("--out-kb", gen.out_kb)->required();
  g->add_option("--out-corpus", gen.out_corpus)->required();

  auto* validate = app.add_subcommand("validate", "Check a KB and corpus");
  add_common(validate, common, false);

  auto* vectorize = app.add_subcommand("vectorize", "Dump tf.idf vectors as JSON-Lines");
  add_common(vectorize, common, true);
  vectorize->add_option("--space", vec.space, "'all' or comma-separated spaces")
      ->capture_default_str();
  vectorize->add_option("--out", vec.out, "Output path (default: stdout)");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  parallel::ScopedThreadCount threads(common.threads);
  int code = kOk;
  try {
    if (cluster->parsed()) code = cmd_cluster(common, cl, out);
    else if (tune->parsed()) code = cmd_tune(common, tu, out, err);
    else if (g->parsed()) code = cmd_gen(gen, out);
    else if (validate->parsed()) code = cmd_validate(common, out);
    else if (vectorize->parsed()) code = cmd_vectorize(common, vec, out);
  } catch (const StageError& e) {
    err << "error: stage=" << e.stage << ": " << e.message << '\n';
    code = e.code;
  }
  return code;
}

}  // namespace nevsm::cli
