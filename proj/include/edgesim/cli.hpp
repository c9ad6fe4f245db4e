#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "edgesim/community.hpp"
#include "edgesim/generate.hpp"
#include "edgesim/graph.hpp"
#include "edgesim/metrics.hpp"
#include "edgesim/report.hpp"
#include "edgesim/similarity.hpp"

namespace edgesim::cli {

enum class Command { Score, Detect, Eval, Compare, Bench };
enum class OutputFormat { Csv, Json, Markdown };

/// One reproducible run: everything an invocation needs, including the seed
/// for any synthetic benchmark graphs.
struct RunConfig {
  Command command = Command::Score;
  std::string graph_path;
  std::optional<std::string> truth_path;
  std::vector<Measure> measures;
  DetectorParams detector;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> output_path;
  std::uint64_t seed = 42;
  std::vector<std::size_t> sizes = {1000, 4000, 16000};
  std::size_t max_degree = 50;
};

/// Raised for bad usage or unreadable inputs; mapped to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open graph file: " + path);
  return Graph::from_edge_list(in);
}

inline Partition load_truth_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open ground-truth file: " + path);
  return Partition::load_ground_truth(in, g);
}

inline std::string dataset_label(const std::string& graph_path) {
  return std::filesystem::path(graph_path).stem().string();
}

// scores.csv + "ndes" -> scores.ndes.csv
inline std::string per_measure_path(const std::string& base, Measure m) {
  std::filesystem::path p(base);
  auto ext = p.extension().string();
  p.replace_extension();
  p += "." + std::string(to_string(m)) + ext;
  return p.string();
}

// Writes one artifact either to a file or to stdout.
inline void with_output(const std::optional<std::string>& path,
                        const std::function<void(std::ostream&)>& writer) {
  if (path) {
    std::ofstream out(*path, std::ios::binary);
    if (!out) throw UsageError("cannot open output file: " + *path);
    writer(out);
    if (!out) throw std::runtime_error("failed writing output file: " + *path);
  } else {
    writer(std::cout);
  }
}

inline void require_measures(const RunConfig& cfg) {
  if (cfg.measures.empty()) throw UsageError("at least one --measure is required");
}

inline std::vector<EvalReport> run_reports(const RunConfig& cfg, const Graph& g,
                                           const Partition* truth) {
  std::vector<EvalReport> reports;
  for (Measure m : cfg.measures) {
    EdgeScores scores = score_all_edges(g, m);
    Partition detected = detect(g, scores, cfg.detector);
    reports.push_back(evaluate(g, m, detected, truth, dataset_label(cfg.graph_path)));
  }
  return reports;
}

inline void write_reports(const RunConfig& cfg, std::span<const EvalReport> reports) {
  with_output(cfg.output_path, [&](std::ostream& out) {
    switch (cfg.format) {
      case OutputFormat::Csv: write_reports_csv(reports, out); break;
      case OutputFormat::Json: write_reports_json(reports, out); break;
      case OutputFormat::Markdown: write_reports_markdown(reports, out); break;
    }
  });
}

}  // namespace detail

/// Writes per-edge scores for each requested measure. NDES rows carry both
/// directions. With an output path and several measures, each measure goes
/// to its own file (the measure name is inserted before the extension).
inline int cmd_score(const RunConfig& cfg) {
  detail::require_measures(cfg);
  Graph g = detail::load_graph_file(cfg.graph_path);
  bool multi = cfg.measures.size() > 1;
  for (Measure m : cfg.measures) {
    EdgeScores scores = score_all_edges(g, m);
    std::optional<std::string> path = cfg.output_path;
    if (path && multi) path = detail::per_measure_path(*path, m);
    detail::with_output(path, [&](std::ostream& out) {
      if (cfg.format == OutputFormat::Json) {
        write_scores_json(g, scores, out);
      } else {
        if (!cfg.output_path && multi) out << "# measure=" << to_string(m) << '\n';
        write_scores_csv(g, scores, out);
      }
    });
  }
  return 0;
}

/// Detects communities per measure and writes them in the ground-truth text
/// format (one community per line).
inline int cmd_detect(const RunConfig& cfg) {
  detail::require_measures(cfg);
  Graph g = detail::load_graph_file(cfg.graph_path);
  bool multi = cfg.measures.size() > 1;
  for (Measure m : cfg.measures) {
    EdgeScores scores = score_all_edges(g, m);
    Partition p = detect(g, scores, cfg.detector);
    std::optional<std::string> path = cfg.output_path;
    if (path && multi) path = detail::per_measure_path(*path, m);
    detail::with_output(path, [&](std::ostream& out) {
      if (!cfg.output_path && multi) out << "# measure=" << to_string(m) << '\n';
      p.write_communities(out, g);
    });
  }
  return 0;
}

/// Runs detect + evaluate for every measure against ground truth and renders
/// one table per dataset.
inline int cmd_compare(const RunConfig& cfg) {
  detail::require_measures(cfg);
  if (!cfg.truth_path) throw UsageError("--truth is required");
  Graph g = detail::load_graph_file(cfg.graph_path);
  Partition truth = detail::load_truth_file(*cfg.truth_path, g);
  auto reports = detail::run_reports(cfg, g, &truth);
  detail::write_reports(cfg, reports);
  return 0;
}

/// Same pipeline as compare; kept as its own command for single-measure runs.
inline int cmd_eval(const RunConfig& cfg) { return cmd_compare(cfg); }

/// Times score_all_edges per measure over a ladder of seeded random graphs
/// with bounded maximum degree; emits one (n, k, measure, seconds) row each.
inline int cmd_bench(const RunConfig& cfg) {
  detail::require_measures(cfg);
  if (cfg.sizes.empty()) throw UsageError("--sizes must not be empty");
  struct Row {
    std::size_t n;
    std::size_t k;
    Measure measure;
    double seconds;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < cfg.sizes.size(); ++i) {
    std::size_t n = cfg.sizes[i];
    Graph g = random_fixed_degree(n, cfg.max_degree, cfg.seed + i);
    for (Measure m : cfg.measures) {
      auto start = std::chrono::steady_clock::now();
      EdgeScores scores = score_all_edges(g, m);
      auto stop = std::chrono::steady_clock::now();
      (void)scores;
      rows.push_back({n, cfg.max_degree, m, std::chrono::duration<double>(stop - start).count()});
    }
  }
  detail::with_output(cfg.output_path, [&](std::ostream& out) {
    switch (cfg.format) {
      case OutputFormat::Json: {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows)
          j.push_back({{"n", r.n},
                       {"k", r.k},
                       {"measure", std::string(to_string(r.measure))},
                       {"seconds", r.seconds}});
        out << j.dump(2) << '\n';
        break;
      }
      case OutputFormat::Markdown:
        out << "| n | k | measure | seconds |\n|---|---|---|---|\n";
        for (const auto& r : rows)
          out << "| " << r.n << " | " << r.k << " | " << to_string(r.measure) << " | "
              << edgesim::detail::format_fixed(r.seconds, 6) << " |\n";
        break;
      case OutputFormat::Csv:
        out << "n,k,measure,seconds\n";
        for (const auto& r : rows)
          out << r.n << ',' << r.k << ',' << to_string(r.measure) << ','
              << edgesim::detail::format_double(r.seconds) << '\n';
        break;
    }
  });
  return 0;
}

inline int dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Score: return cmd_score(cfg);
    case Command::Detect: return cmd_detect(cfg);
    case Command::Eval: return cmd_eval(cfg);
    case Command::Compare: return cmd_compare(cfg);
    case Command::Bench: return cmd_bench(cfg);
  }
  return 2;
}

namespace detail {

inline std::vector<Measure> parse_measures(const std::vector<std::string>& names) {
  std::vector<Measure> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.assign(kAllMeasures.begin(), kAllMeasures.end());
      continue;
    }
    auto m = measure_from_string(name);
    if (!m) {
      std::string valid;
      for (Measure mm : kAllMeasures) {
        if (!valid.empty()) valid += ", ";
        valid += to_string(mm);
      }
      throw UsageError("unknown measure '" + name + "' (valid: " + valid + ")");
    }
    out.push_back(*m);
  }
  return out;
}

inline std::optional<double> parse_threshold(const std::string& text) {
  if (text == "auto") return std::nullopt;
  try {
    std::size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--threshold must be a number or 'auto'");
  }
}

inline SeedOrder parse_seed_order(const std::string& text) {
  if (text == "degree" || text == "degree_desc") return SeedOrder::DegreeDesc;
  if (text == "info" || text == "info_desc") return SeedOrder::InfoDesc;
  throw UsageError("--seed-order must be 'degree' or 'info'");
}

inline OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "json") return OutputFormat::Json;
  if (text == "markdown" || text == "md") return OutputFormat::Markdown;
  throw UsageError("--format must be csv, json, or markdown");
}

}  // namespace detail

/// Parses arguments and runs one command. Returns 0 when every requested
/// artifact was written, 2 on usage or input errors, 1 on anything else.
inline int run(int argc, const char* const* argv) {
  CLI::App app{"Edge-similarity scoring, community detection, and evaluation on edge-list graphs"};
  app.require_subcommand(1);

  std::string graph_path, truth_path, threshold_text = "auto";
  std::string seed_order_text = "degree", format_text;
  std::string output_path;
  std::vector<std::string> measure_names;
  std::vector<std::size_t> sizes = {1000, 4000, 16000};
  std::size_t min_size = 1, max_degree = 50;
  std::uint64_t seed = 42;

  auto add_common = [&](CLI::App* sub, bool needs_graph) {
    if (needs_graph) sub->add_option("--graph", graph_path, "edge-list file")->required();
    sub->add_option("--measure", measure_names, "similarity measure (repeatable; 'all' expands)")
        ->required();
    sub->add_option("--out", output_path, "output file (default: stdout)");
  };
  auto add_detector = [&](CLI::App* sub) {
    sub->add_option("--threshold", threshold_text, "absorption threshold or 'auto' (default)");
    sub->add_option("--min-size", min_size, "merge communities smaller than this");
    sub->add_option("--seed-order", seed_order_text, "seed order: degree|info");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format_text, "output format: csv|json|markdown");
  };

  auto* score = app.add_subcommand("score", "score every edge under each measure");
  add_common(score, true);
  add_format(score);

  auto* detect_cmd = app.add_subcommand("detect", "detect communities per measure");
  add_common(detect_cmd, true);
  add_detector(detect_cmd);

  auto* eval_cmd = app.add_subcommand("eval", "detect and evaluate against ground truth");
  add_common(eval_cmd, true);
  add_detector(eval_cmd);
  add_format(eval_cmd);
  eval_cmd->add_option("--truth", truth_path, "ground-truth communities file")->required();

  auto* compare = app.add_subcommand("compare", "evaluate several measures side by side");
  add_common(compare, true);
  add_detector(compare);
  add_format(compare);
  compare->add_option("--truth", truth_path, "ground-truth communities file")->required();

  auto* bench = app.add_subcommand("bench", "time edge scoring on synthetic graphs");
  add_common(bench, false);
  add_format(bench);
  bench->add_option("--sizes", sizes, "node counts of the benchmark ladder")->delimiter(',');
  bench->add_option("--max-degree", max_degree, "maximum degree of generated graphs");
  bench->add_option("--seed", seed, "seed for benchmark graph generation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunConfig cfg;
    cfg.graph_path = graph_path;
    if (!truth_path.empty()) cfg.truth_path = truth_path;
    cfg.measures = detail::parse_measures(measure_names);
    cfg.detector.threshold = detail::parse_threshold(threshold_text);
    cfg.detector.min_community_size = min_size;
    cfg.detector.seed_order = detail::parse_seed_order(seed_order_text);
    if (format_text.empty())
      format_text = (eval_cmd->parsed() || compare->parsed()) ? "markdown" : "csv";
    cfg.format = detail::parse_format(format_text);
    if (!output_path.empty()) cfg.output_path = output_path;
    cfg.seed = seed;
    cfg.sizes = sizes;
    cfg.max_degree = max_degree;
    if (score->parsed()) cfg.command = Command::Score;
    else if (detect_cmd->parsed()) cfg.command = Command::Detect;
    else if (eval_cmd->parsed()) cfg.command = Command::Eval;
    else if (compare->parsed()) cfg.command = Command::Compare;
    else cfg.command = Command::Bench;
    return dispatch(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

/// Test-friendly entry point; `args` excludes the program name.
inline int run(const std::vector<std::string>& args) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.emplace_back("edgesim");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());
  return run(static_cast<int>(argv.size()), argv.data());
}

}  // namespace edgesim::cli
