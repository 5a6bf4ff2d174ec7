#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "termweight/vectorizer.hpp"

namespace termweight {

enum class FrequencyAxis { DocumentFrequency, TermFrequency };

FrequencyAxis parse_frequency_axis(std::string_view name);

struct ScatterPoint {
  std::string term;
  Count x;   // corpus frequency of the term
  double y;  // normalized aggregated score
};

/// One point per vocabulary term. The df axis uses the counts stored in the
/// model; the tf axis needs the training statistics.
std::vector<ScatterPoint> scatter(const WeightingModel& model);
std::vector<ScatterPoint> scatter(const WeightingModel& model, const CorpusStatistics& stats,
                                  FrequencyAxis axis);

struct DistributionStats {
  double meany = 0.0;
  double stdy = 0.0;
  double sumstd = 0.0;
};

/// Population statistics of the y values: overall mean and standard
/// deviation, and the sum over distinct x of the standard deviation of the
/// y values sharing that x. Throws ContractViolation on empty input.
DistributionStats distribution_stats(std::span<const ScatterPoint> points);

/// CSV `term,frequency,score`.
void write_scatter_csv(std::ostream& out, std::span<const ScatterPoint> points);

struct MetricStats {
  GlobalMetric metric;
  DistributionStats stats;
};

/// CSV `metric,meany,stdy,sumstd`.
void write_stats_csv(std::ostream& out, std::span<const MetricStats> rows);

}  // namespace termweight
