#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "termweight/corpus.hpp"
#include "termweight/global_weighting.hpp"
#include "termweight/local_weighting.hpp"

namespace termweight {

struct SparseEntry {
  TermIndex index;
  double weight;

  bool operator==(const SparseEntry&) const = default;
};

/// One document as (index, weight) pairs with strictly ascending indices.
struct SparseVector {
  std::vector<SparseEntry> entries;
  std::optional<std::string> label;

  double norm() const;
  bool operator==(const SparseVector&) const = default;
};

/// Maps each score to (s - min) / (max - min). A constant population maps
/// to 1.0 everywhere. Returns the bounds through `bounds` when given.
std::vector<double> minmax_normalize(std::span<const double> scores,
                                     std::pair<double, double>* bounds = nullptr);

struct VectorizerConfig {
  GlobalMetric metric = GlobalMetric::Baseline;
  LocalScheme local;
  Aggregation aggregation = Aggregation::Max;
  bool cosine = true;
  ScoringOptions scoring;
};

/// Fitted vocabulary with aggregated and min-max normalized global scores.
struct WeightingModel {
  VectorizerConfig config;
  TokenizerConfig tokenizer;
  std::vector<std::string> classes;
  Vocabulary vocabulary;
  std::vector<Count> document_frequency;   // per term, training df
  std::vector<std::vector<double>> raw;    // per term, per class
  std::vector<double> aggregated;          // per term
  std::vector<double> normalized;          // per term, in [0,1]
  double score_min = 0.0;
  double score_max = 0.0;

  std::size_t size() const noexcept { return vocabulary.size(); }
  double normalized_score(TermIndex index) const { return normalized.at(index - 1); }
};

WeightingModel fit(const Corpus& corpus, const VectorizerConfig& config);
WeightingModel fit(const Corpus& corpus, const CorpusStatistics& stats,
                   const VectorizerConfig& config);

struct TransformDiagnostics {
  std::size_t documents = 0;
  std::size_t oov_tokens = 0;
  std::size_t empty_vectors = 0;

  TransformDiagnostics& operator+=(const TransformDiagnostics& other);
};

/// Weighs the in-vocabulary terms of `tokens`: local weight (with max_tf
/// taken over all tokens of the document) times normalized global score,
/// zero weights dropped, then L2-normalized when the model's cosine flag is
/// set. Out-of-vocabulary tokens are dropped and counted.
SparseVector transform(const WeightingModel& model, std::span<const std::string> tokens,
                       TransformDiagnostics* diagnostics = nullptr);
SparseVector transform(const WeightingModel& model, const LabeledDocument& document,
                       TransformDiagnostics* diagnostics = nullptr);

std::vector<SparseVector> transform_corpus(const WeightingModel& model,
                                           std::span<const LabeledDocument> documents,
                                           TransformDiagnostics* diagnostics = nullptr);

}  // namespace termweight
