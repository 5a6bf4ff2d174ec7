#include "termweight/vectorizer.hpp"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_map>

#include "termweight/error.hpp"

namespace termweight {

double SparseVector::norm() const {
  double sum = 0.0;
  for (const auto& e : entries) sum += e.weight * e.weight;
  return std::sqrt(sum);
}

std::vector<double> minmax_normalize(std::span<const double> scores,
                                     std::pair<double, double>* bounds) {
  if (scores.empty()) return {};
  const auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
  const double min = *lo;
  const double max = *hi;
  if (bounds) *bounds = {min, max};
  std::vector<double> out(scores.size(), 1.0);
  if (max > min) {
    const double range = max - min;
    for (std::size_t i = 0; i < scores.size(); ++i) out[i] = (scores[i] - min) / range;
  }
  return out;
}

WeightingModel fit(const Corpus& corpus, const VectorizerConfig& config) {
  return fit(corpus, compute_counts(corpus), config);
}

WeightingModel fit(const Corpus& corpus, const CorpusStatistics& stats,
                   const VectorizerConfig& config) {
  config.local.validate();
  if (stats.terms.size() != corpus.vocabulary().size()) {
    throw ContractViolation("fit: statistics do not belong to this corpus");
  }
  auto table = score_vocabulary(config.metric, stats, config.aggregation, config.scoring);

  WeightingModel model;
  model.config = config;
  model.tokenizer = corpus.tokenizer();
  model.classes = corpus.classes();
  model.vocabulary = corpus.vocabulary();
  model.document_frequency.reserve(stats.terms.size());
  for (const auto& t : stats.terms) model.document_frequency.push_back(t.df);
  std::pair<double, double> bounds;
  model.normalized = minmax_normalize(table.aggregated, &bounds);
  model.score_min = bounds.first;
  model.score_max = bounds.second;
  model.raw = std::move(table.raw);
  model.aggregated = std::move(table.aggregated);
  return model;
}

TransformDiagnostics& TransformDiagnostics::operator+=(const TransformDiagnostics& other) {
  documents += other.documents;
  oov_tokens += other.oov_tokens;
  empty_vectors += other.empty_vectors;
  return *this;
}

SparseVector transform(const WeightingModel& model, std::span<const std::string> tokens,
                       TransformDiagnostics* diagnostics) {
  std::unordered_map<std::string_view, long> frequency;
  long max_tf = 0;
  for (const auto& token : tokens) max_tf = std::max(max_tf, ++frequency[token]);

  SparseVector vec;
  std::size_t oov = 0;
  for (const auto& [term, tf] : frequency) {
    const auto index = model.vocabulary.find(term);
    if (!index) {
      oov += static_cast<std::size_t>(tf);
      continue;
    }
    const double weight =
        local_weight(model.config.local, tf, max_tf) * model.normalized_score(*index);
    if (weight != 0.0) vec.entries.push_back({*index, weight});
  }
  std::sort(vec.entries.begin(), vec.entries.end(),
            [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });

  if (model.config.cosine && !vec.entries.empty()) {
    const double norm = vec.norm();
    for (auto& e : vec.entries) e.weight /= norm;
  }
  if (diagnostics) {
    ++diagnostics->documents;
    diagnostics->oov_tokens += oov;
    if (vec.entries.empty()) ++diagnostics->empty_vectors;
  }
  return vec;
}

SparseVector transform(const WeightingModel& model, const LabeledDocument& document,
                       TransformDiagnostics* diagnostics) {
  auto vec = transform(model, document.tokens, diagnostics);
  vec.label = document.label;
  return vec;
}

std::vector<SparseVector> transform_corpus(const WeightingModel& model,
                                           std::span<const LabeledDocument> documents,
                                           TransformDiagnostics* diagnostics) {
  std::vector<SparseVector> out;
  out.reserve(documents.size());
  for (const auto& doc : documents) out.push_back(transform(model, doc, diagnostics));
  return out;
}

}  // namespace termweight
