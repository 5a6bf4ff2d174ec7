#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termweight/corpus.hpp"

namespace termweight {

/// Supervised global weighting metrics, scored per (term, class).
enum class GlobalMetric {
  Baseline,          // bl: constant 1
  DeltaSmoothedIdf,  // dsidf
  DeltaBm25Idf,      // dbidf
  RelevanceFrequency,  // rf
  InformationGain,   // ig (class independent)
  PointwiseMutualInformation,  // pmi
  NaturalEntropy,    // ne
  ChiSquare,         // chi
  NglCoefficient,    // ngl
  ClassDiscrimination,  // cdm
  CategoricalProportionalDifference,  // cpd
  MultinomialZScore,  // zd
  KullbackLeibler,   // kl
  WeightedLogLikelihoodRatio,  // wllr
  OddsRatio,         // orr
};

inline constexpr std::array<GlobalMetric, 15> kAllGlobalMetrics = {
    GlobalMetric::Baseline,
    GlobalMetric::DeltaSmoothedIdf,
    GlobalMetric::DeltaBm25Idf,
    GlobalMetric::RelevanceFrequency,
    GlobalMetric::InformationGain,
    GlobalMetric::PointwiseMutualInformation,
    GlobalMetric::NaturalEntropy,
    GlobalMetric::ChiSquare,
    GlobalMetric::NglCoefficient,
    GlobalMetric::ClassDiscrimination,
    GlobalMetric::CategoricalProportionalDifference,
    GlobalMetric::MultinomialZScore,
    GlobalMetric::KullbackLeibler,
    GlobalMetric::WeightedLogLikelihoodRatio,
    GlobalMetric::OddsRatio,
};

/// Row order of the grid report.
inline constexpr std::array<GlobalMetric, 15> kReportOrder = {
    GlobalMetric::Baseline,
    GlobalMetric::MultinomialZScore,
    GlobalMetric::InformationGain,
    GlobalMetric::PointwiseMutualInformation,
    GlobalMetric::NaturalEntropy,
    GlobalMetric::ChiSquare,
    GlobalMetric::KullbackLeibler,
    GlobalMetric::WeightedLogLikelihoodRatio,
    GlobalMetric::OddsRatio,
    GlobalMetric::DeltaSmoothedIdf,
    GlobalMetric::DeltaBm25Idf,
    GlobalMetric::RelevanceFrequency,
    GlobalMetric::ClassDiscrimination,
    GlobalMetric::NglCoefficient,
    GlobalMetric::CategoricalProportionalDifference,
};

std::string_view to_string(GlobalMetric metric);
/// Throws ConfigError listing the valid identifiers.
GlobalMetric parse_global_metric(std::string_view name);
std::string global_metric_names();

enum class Aggregation { Max, Sum, Min };

std::string_view to_string(Aggregation rule);
Aggregation parse_aggregation(std::string_view name);

struct ScoringOptions {
  /// Logarithm base used inside every formula; 0 selects the natural log.
  double log_base = 0.0;
};

/// Score of `term` for class `cls` under `metric`.
///
/// Natural log throughout. Degenerate counts are handled so that the result
/// is finite for every term with df >= 1:
///  - x*log(x/y) is taken as 0 when x == 0 (ig, ne, kl, wllr);
///  - pmi, cdm, wllr, orr and zd clamp a document count that would zero a
///    log argument or a denominator into [0.5, limit - 0.5]; an empty limit
///    (a class with no complement) is treated as 1;
///  - chi and ngl are 0 when the term occurs in every document or the class
///    has no complement, where the numerator vanishes as well.
double global_score(GlobalMetric metric, const TermCounts& term, const CorpusCounts& corpus,
                    ClassIndex cls, const ScoringOptions& options = {});

/// Collapses per-class scores into one. Throws ContractViolation on empty
/// input.
double aggregate(std::span<const double> class_scores, Aggregation rule);

struct TermScoreTable {
  GlobalMetric metric = GlobalMetric::Baseline;
  Aggregation aggregation = Aggregation::Max;
  std::vector<std::vector<double>> raw;  // raw[term - 1][class]
  std::vector<double> aggregated;        // aggregated[term - 1]
};

TermScoreTable score_vocabulary(GlobalMetric metric, const CorpusStatistics& stats,
                                Aggregation rule = Aggregation::Max,
                                const ScoringOptions& options = {});

}  // namespace termweight
