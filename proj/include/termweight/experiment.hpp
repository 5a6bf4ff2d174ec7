#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <vector>

#include "termweight/distribution.hpp"
#include "termweight/evaluation.hpp"

namespace termweight {

struct CellResult {
  WeightingModel weighting;
  EvaluationReport report;
  TransformDiagnostics train_diagnostics;
  TransformDiagnostics test_diagnostics;
};

/// fit -> transform -> train -> evaluate for one (global, local) pair.
/// Errors are rethrown with the failing stage's name prepended.
CellResult run_cell(const Corpus& train, const CorpusStatistics& stats,
                    std::span<const LabeledDocument> test, const VectorizerConfig& vectorizer,
                    const TrainConfig& training);

/// Throws EvaluationError naming the first test label the training corpus
/// never saw.
void check_test_labels(const Corpus& train, std::span<const LabeledDocument> test);

struct GridRow {
  GlobalMetric metric;
  std::array<double, 4> f1;  // tp, tf, atf, logtf; fraction in [0,1]
  DistributionStats stats;
};

struct GridOptions {
  VectorizerConfig base;  // aggregation, cosine, atf k; metric/local are overridden
  TrainConfig training;
  F1Mode mode = F1Mode::MacroAll;
  FrequencyAxis axis = FrequencyAxis::DocumentFrequency;
  unsigned threads = 1;
};

/// Every global metric crossed with every local scheme, rows in report order.
std::vector<GridRow> run_grid(const Corpus& train, std::span<const LabeledDocument> test,
                              const GridOptions& options);

/// `metric tp tf atf logtf sumstd stdy meany`; F1 as percentages.
void write_grid_tsv(std::ostream& out, std::span<const GridRow> rows, const GridOptions& options);

}  // namespace termweight
