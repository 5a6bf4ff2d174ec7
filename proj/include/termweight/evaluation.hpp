#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "termweight/linear_classifier.hpp"

namespace termweight {

enum class F1Mode {
  MacroAll,       // unweighted mean over every class
  PosNegAverage,  // mean of the positive and negative classes only
};

std::string_view to_string(F1Mode mode);
F1Mode parse_f1_mode(std::string_view name);

struct ClassScores {
  std::string name;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t support = 0;  // gold documents of this class
};

struct EvaluationReport {
  std::vector<ClassScores> per_class;
  std::vector<std::vector<std::size_t>> confusion;  // [gold][predicted]
  double macro_f1 = 0.0;
  /// Present when the class set has a positive and a negative class
  /// ("positive"/"pos" and "negative"/"neg").
  std::optional<double> posneg_f1;
  double accuracy = 0.0;
  std::size_t documents = 0;

  /// The figure selected by `mode`. Throws EvaluationError when posneg is
  /// requested but unavailable.
  double headline(F1Mode mode) const;
};

/// Scores predicted against gold class indices, with 0/0 taken as 0.
EvaluationReport score_predictions(std::span<const std::string> classes,
                                   std::span<const std::size_t> gold,
                                   std::span<const std::size_t> predicted);

/// Predicts every vector and scores it against its label. Throws
/// EvaluationError for an empty set, an unlabeled vector, or a label outside
/// the model's classes.
EvaluationReport evaluate(const LinearModel& model, std::span<const SparseVector> vectors);

struct ReportContext {
  std::string metric;
  std::string local;
  std::uint64_t seed = 42;
  F1Mode mode = F1Mode::MacroAll;
};

/// Per-class TSV: `class precision recall f1 support`, then macro (and
/// posneg) rows.
void write_report_tsv(std::ostream& out, const EvaluationReport& report, const ReportContext& ctx);
void write_report_text(std::ostream& out, const EvaluationReport& report, const ReportContext& ctx);

}  // namespace termweight
