#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "edgesim/community.hpp"
#include "edgesim/graph.hpp"
#include "edgesim/metrics.hpp"
#include "edgesim/similarity.hpp"
#include "edgesim/text.hpp"

namespace edgesim {

/// Accuracy and quality results for one (measure, dataset) run.
/// Accuracy fields are present only when ground truth was supplied.
struct EvalReport {
  Measure measure = Measure::Ndes;
  std::string dataset;
  std::optional<double> nmi;
  std::optional<double> ari;
  std::optional<double> nf1;
  double modularity = 0.0;
  double conductance = 0.0;
  double cut_ratio = 0.0;
  double expansion = 0.0;
};

/// Scores all metrics of a detected partition, with accuracy metrics when a
/// ground-truth partition is given.
inline EvalReport evaluate(const Graph& g, Measure m, const Partition& detected,
                           const Partition* truth, std::string dataset) {
  EvalReport r;
  r.measure = m;
  r.dataset = std::move(dataset);
  r.modularity = modularity(g, detected);
  r.conductance = conductance(g, detected);
  r.cut_ratio = cut_ratio(g, detected);
  r.expansion = expansion(g, detected);
  if (truth) {
    r.nmi = nmi(detected, *truth);
    r.ari = ari(detected, *truth);
    r.nf1 = nf1(detected, *truth);
  }
  return r;
}

inline void write_reports_csv(std::span<const EvalReport> reports, std::ostream& out) {
  out << "dataset,measure,nmi,ari,nf1,modularity,conductance,cut_ratio,expansion\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? detail::format_double(*v) : std::string{};
  };
  for (const auto& r : reports) {
    out << detail::csv_field(r.dataset) << ',' << to_string(r.measure) << ',' << opt(r.nmi) << ','
        << opt(r.ari) << ',' << opt(r.nf1) << ',' << detail::format_double(r.modularity) << ','
        << detail::format_double(r.conductance) << ',' << detail::format_double(r.cut_ratio)
        << ',' << detail::format_double(r.expansion) << '\n';
  }
}

inline void write_reports_markdown(std::span<const EvalReport> reports, std::ostream& out) {
  if (!reports.empty()) out << "### " << reports.front().dataset << "\n\n";
  out << "| measure | nmi | ari | nf1 | modularity | conductance | cut_ratio | expansion |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  auto opt = [](const std::optional<double>& v) {
    return v ? detail::format_fixed(*v, 4) : std::string{"-"};
  };
  for (const auto& r : reports) {
    out << "| " << to_string(r.measure) << " | " << opt(r.nmi) << " | " << opt(r.ari) << " | "
        << opt(r.nf1) << " | " << detail::format_fixed(r.modularity, 4) << " | "
        << detail::format_fixed(r.conductance, 4) << " | " << detail::format_fixed(r.cut_ratio, 4)
        << " | " << detail::format_fixed(r.expansion, 4) << " |\n";
  }
}

inline nlohmann::json report_to_json(const EvalReport& r) {
  nlohmann::json j{
      {"dataset", r.dataset},
      {"measure", std::string(to_string(r.measure))},
      {"modularity", r.modularity},
      {"conductance", r.conductance},
      {"cut_ratio", r.cut_ratio},
      {"expansion", r.expansion},
  };
  if (r.nmi) j["nmi"] = *r.nmi;
  if (r.ari) j["ari"] = *r.ari;
  if (r.nf1) j["nf1"] = *r.nf1;
  return j;
}

inline void write_reports_json(std::span<const EvalReport> reports, std::ostream& out) {
  nlohmann::json j;
  j["nf1_variant"] = kNf1Variant;
  j["reports"] = nlohmann::json::array();
  for (const auto& r : reports) j["reports"].push_back(report_to_json(r));
  out << j.dump(2) << '\n';
}

inline void write_scores_json(const Graph& g, const EdgeScores& scores, std::ostream& out) {
  nlohmann::json j;
  j["measure"] = std::string(to_string(scores.measure()));
  j["directed"] = scores.directed();
  auto rows = nlohmann::json::array();
  auto edges = g.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    rows.push_back({{"src", g.label(u)}, {"dst", g.label(v)}, {"score", scores.forward(e)}});
    if (scores.directed())
      rows.push_back({{"src", g.label(v)}, {"dst", g.label(u)}, {"score", scores.reverse(e)}});
  }
  j["scores"] = std::move(rows);
  out << j.dump(2) << '\n';
}

}  // namespace edgesim
