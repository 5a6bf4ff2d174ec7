#include "termweight/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>

#include "termweight/error.hpp"
#include "termweight/io.hpp"

namespace termweight {

FrequencyAxis parse_frequency_axis(std::string_view name) {
  if (name == "df") return FrequencyAxis::DocumentFrequency;
  if (name == "tf") return FrequencyAxis::TermFrequency;
  throw ConfigError("unknown frequency axis '" + std::string(name) + "' (expected df or tf)");
}

std::vector<ScatterPoint> scatter(const WeightingModel& model) {
  std::vector<ScatterPoint> points;
  points.reserve(model.size());
  for (std::size_t i = 0; i < model.size(); ++i) {
    points.push_back({model.vocabulary.terms()[i], model.document_frequency[i], model.normalized[i]});
  }
  return points;
}

std::vector<ScatterPoint> scatter(const WeightingModel& model, const CorpusStatistics& stats,
                                  FrequencyAxis axis) {
  if (stats.terms.size() != model.size()) {
    throw ContractViolation("scatter: statistics and model vocabulary differ in size");
  }
  auto points = scatter(model);
  if (axis == FrequencyAxis::TermFrequency) {
    for (std::size_t i = 0; i < points.size(); ++i) points[i].x = stats.terms[i].tf;
  }
  return points;
}

namespace {

// Summing in sorted order makes the result independent of point order.
double sorted_mean(std::vector<double>& ys) {
  std::sort(ys.begin(), ys.end());
  double sum = 0.0;
  for (double y : ys) sum += y;
  return sum / static_cast<double>(ys.size());
}

// Two-pass; exactly 0 for a constant sample regardless of rounding in mean.
double population_std(const std::vector<double>& ys, double mean) {
  if (std::adjacent_find(ys.begin(), ys.end(), std::not_equal_to<>()) == ys.end()) return 0.0;
  double ss = 0.0;
  for (double y : ys) ss += (y - mean) * (y - mean);
  return std::sqrt(ss / static_cast<double>(ys.size()));
}

}  // namespace

DistributionStats distribution_stats(std::span<const ScatterPoint> points) {
  if (points.empty()) throw ContractViolation("distribution_stats: no points");
  std::vector<double> all;
  all.reserve(points.size());
  std::map<Count, std::vector<double>> groups;
  for (const auto& p : points) {
    all.push_back(p.y);
    groups[p.x].push_back(p.y);
  }
  DistributionStats stats;
  stats.meany = sorted_mean(all);
  stats.stdy = population_std(all, stats.meany);
  for (auto& [x, ys] : groups) {
    const double mean = sorted_mean(ys);
    stats.sumstd += population_std(ys, mean);
  }
  return stats;
}

void write_scatter_csv(std::ostream& out, std::span<const ScatterPoint> points) {
  out << "term,frequency,score\n";
  for (const auto& p : points) {
    // Terms come from a whitespace tokenizer but may still hold commas or quotes.
    if (p.term.find_first_of(",\"") != std::string::npos) {
      out << '"';
      for (char ch : p.term) out << (ch == '"' ? "\"\"" : std::string(1, ch));
      out << '"';
    } else {
      out << p.term;
    }
    out << ',' << p.x << ',' << format_number(p.y, 6) << '\n';
  }
}

void write_stats_csv(std::ostream& out, std::span<const MetricStats> rows) {
  out << "metric,meany,stdy,sumstd\n";
  for (const auto& r : rows) {
    out << to_string(r.metric) << ',' << format_number(r.stats.meany, 6) << ','
        << format_number(r.stats.stdy, 6) << ',' << format_number(r.stats.sumstd, 6) << '\n';
  }
}

}  // namespace termweight
