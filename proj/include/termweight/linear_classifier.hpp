#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "termweight/vectorizer.hpp"

namespace termweight {

struct TrainConfig {
  double C = 1.0;
  double tolerance = 1e-4;
  int max_epochs = 1000;
  std::uint64_t seed = 42;

  void validate() const;
};

/// L2-regularized squared-hinge objective of one binary problem,
///   f(w, b) = 1/2 |w|^2 + C * sum_i max(0, 1 - y_i (w.x_i + b))^2,
/// over parameters theta = (w_1 .. w_dim, b). The intercept is not
/// regularized.
class SquaredHingeObjective {
 public:
  /// `labels` are +1/-1, one per row. Row indices must not exceed `dim`.
  SquaredHingeObjective(std::span<const SparseVector> rows, std::span<const double> labels,
                        double C, std::size_t dim);

  double value(std::span<const double> theta) const;
  std::vector<double> gradient(std::span<const double> theta) const;
  std::size_t dimension() const noexcept { return dim_; }

 private:
  std::span<const SparseVector> rows_;
  std::span<const double> labels_;
  double C_;
  std::size_t dim_;
};

struct BinaryTrace {
  std::vector<double> objective;  // value after each epoch
  int epochs = 0;
  bool converged = false;
};

/// Minimizes SquaredHingeObjective by primal coordinate descent: Newton
/// step per coordinate with backtracking until sufficient decrease, in a
/// seeded random coordinate order. Returns theta (weights then intercept).
std::vector<double> train_binary(std::span<const SparseVector> rows, std::span<const double> labels,
                                 std::size_t dim, const TrainConfig& config,
                                 BinaryTrace* trace = nullptr);

/// One-vs-rest linear classifier.
struct LinearModel {
  std::vector<std::string> classes;
  std::size_t dimension = 0;
  std::vector<std::vector<double>> weights;  // weights[class][index - 1]
  std::vector<double> intercepts;
  TrainConfig config;

  double decision(const SparseVector& x, std::size_t cls) const;
};

/// Trains one binary problem per class (class vs. rest). Every vector must
/// carry a label from `classes`; every class needs at least one vector.
LinearModel train(std::span<const SparseVector> vectors, std::span<const std::string> classes,
                  std::size_t dimension, const TrainConfig& config = {},
                  std::vector<BinaryTrace>* traces = nullptr);

/// Index of the class with the largest decision value; the first class in
/// order wins ties. Indices beyond the model's dimension are ignored.
std::size_t predict_index(const LinearModel& model, const SparseVector& x);
const std::string& predict(const LinearModel& model, const SparseVector& x);

}  // namespace termweight
