#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "termweight/vectorizer.hpp"

namespace termweight {

/// Sparse vector text format: a `#` header comment, then one document per
/// line as `label idx:weight idx:weight ...` with 1-based ascending indices
/// and 6 significant digits. Unlabeled vectors are written with label `_`.
void write_sparse_vectors(std::ostream& out, std::span<const SparseVector> vectors);
void write_sparse_vectors(const std::string& path, std::span<const SparseVector> vectors);

/// Reads the format above; `#` lines are skipped. Throws IngestError with
/// the line number on malformed input.
std::vector<SparseVector> read_sparse_vectors(std::istream& in);
std::vector<SparseVector> read_sparse_vectors(const std::string& path);

/// Renders a double with `digits` significant digits ("%.*g").
std::string format_number(double value, int digits);

/// Score table TSV: `term index df raw_<class>... aggregated`, with a
/// header row. Scores are written with full round-trip precision.
void write_score_table(std::ostream& out, const WeightingModel& model);

/// Model file: `# termweight-model v1`, `key=value` config lines, then the
/// score table.
void save_model(std::ostream& out, const WeightingModel& model);
void save_model(const std::string& path, const WeightingModel& model);
WeightingModel load_model(std::istream& in);
WeightingModel load_model(const std::string& path);

}  // namespace termweight
