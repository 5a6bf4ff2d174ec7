#include "termweight/linear_classifier.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>

#include "termweight/error.hpp"

namespace termweight {

void TrainConfig::validate() const {
  if (!(C > 0.0)) throw ConfigError("regularization strength C must be positive");
  if (!(tolerance > 0.0)) throw ConfigError("tolerance must be positive");
  if (max_epochs <= 0) throw ConfigError("max_epochs must be positive");
}

SquaredHingeObjective::SquaredHingeObjective(std::span<const SparseVector> rows,
                                             std::span<const double> labels, double C,
                                             std::size_t dim)
    : rows_(rows), labels_(labels), C_(C), dim_(dim) {
  if (rows.size() != labels.size()) throw ContractViolation("one label per row required");
  for (const auto& r : rows) {
    if (!r.entries.empty() && r.entries.back().index > dim) {
      throw ContractViolation("row index exceeds objective dimension");
    }
  }
}

namespace {

double dot(const SparseVector& x, std::span<const double> w) {
  double s = 0.0;
  for (const auto& e : x.entries) s += w[e.index - 1] * e.weight;
  return s;
}

}  // namespace

double SquaredHingeObjective::value(std::span<const double> theta) const {
  const auto w = theta.first(dim_);
  const double b = theta[dim_];
  double reg = 0.0;
  for (double v : w) reg += v * v;
  double loss = 0.0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const double slack = 1.0 - labels_[i] * (dot(rows_[i], w) + b);
    if (slack > 0.0) loss += slack * slack;
  }
  return 0.5 * reg + C_ * loss;
}

std::vector<double> SquaredHingeObjective::gradient(std::span<const double> theta) const {
  const auto w = theta.first(dim_);
  const double b = theta[dim_];
  std::vector<double> g(theta.begin(), theta.end());
  g[dim_] = 0.0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const double slack = 1.0 - labels_[i] * (dot(rows_[i], w) + b);
    if (slack <= 0.0) continue;
    const double coef = -2.0 * C_ * labels_[i] * slack;
    for (const auto& e : rows_[i].entries) g[e.index - 1] += coef * e.weight;
    g[dim_] += coef;
  }
  return g;
}

std::vector<double> train_binary(std::span<const SparseVector> rows, std::span<const double> labels,
                                 std::size_t dim, const TrainConfig& config, BinaryTrace* trace) {
  config.validate();
  [[maybe_unused]] const SquaredHingeObjective shape_check(rows, labels, config.C, dim);
  const double C = config.C;
  const std::size_t n = rows.size();

  // Column-major copy; column `dim` is the intercept with value 1 everywhere.
  struct Cell {
    std::uint32_t row;
    double value;
  };
  std::vector<std::vector<Cell>> columns(dim + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& e : rows[i].entries) {
      if (e.weight != 0.0) columns[e.index - 1].push_back({static_cast<std::uint32_t>(i), e.weight});
    }
    columns[dim].push_back({static_cast<std::uint32_t>(i), 1.0});
  }
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j <= dim; ++j) {
    if (!columns[j].empty()) active.push_back(j);
  }

  std::vector<double> theta(dim + 1, 0.0);
  std::vector<double> slack(n, 1.0);  // 1 - y_i (w.x_i + b)

  auto current_value = [&] {
    double reg = 0.0;
    for (std::size_t j = 0; j < dim; ++j) reg += theta[j] * theta[j];
    double loss = 0.0;
    for (double s : slack) loss += s > 0.0 ? s * s : 0.0;
    return 0.5 * reg + C * loss;
  };

  constexpr double kSigma = 0.01;
  constexpr double kBeta = 0.5;
  constexpr int kMaxLineSearch = 40;

  std::mt19937_64 rng(config.seed);
  double first_max_gradient = -1.0;
  int epoch = 0;
  bool converged = false;
  for (; epoch < config.max_epochs && !converged; ++epoch) {
    std::shuffle(active.begin(), active.end(), rng);
    double max_gradient = 0.0;
    for (std::size_t j : active) {
      const bool intercept = j == dim;
      const auto& col = columns[j];
      const double wj = theta[j];
      double d1 = intercept ? 0.0 : wj;
      double d2 = intercept ? 0.0 : 1.0;
      for (const auto& cell : col) {
        const double s = slack[cell.row];
        if (s > 0.0) {
          d1 -= 2.0 * C * labels[cell.row] * cell.value * s;
          d2 += 2.0 * C * cell.value * cell.value;
        }
      }
      max_gradient = std::max(max_gradient, std::abs(d1));
      if (d1 == 0.0 || d2 <= 0.0) continue;

      const double direction = -d1 / d2;
      double lambda = 1.0;
      for (int ls = 0; ls < kMaxLineSearch; ++ls, lambda *= kBeta) {
        const double z = lambda * direction;
        double delta = intercept ? 0.0 : wj * z + 0.5 * z * z;
        for (const auto& cell : col) {
          const double before = std::max(0.0, slack[cell.row]);
          const double after = std::max(0.0, slack[cell.row] - z * labels[cell.row] * cell.value);
          delta += C * (after * after - before * before);
        }
        if (delta <= -kSigma * z * z) {
          theta[j] += z;
          for (const auto& cell : col) slack[cell.row] -= z * labels[cell.row] * cell.value;
          break;
        }
      }
    }
    if (first_max_gradient < 0.0) first_max_gradient = max_gradient;
    if (trace) trace->objective.push_back(current_value());
    converged = max_gradient <= config.tolerance * std::max(first_max_gradient, 1e-300);
  }
  if (trace) {
    trace->epochs = epoch;
    trace->converged = converged;
  }
  return theta;
}

double LinearModel::decision(const SparseVector& x, std::size_t cls) const {
  const auto& w = weights.at(cls);
  double s = intercepts[cls];
  for (const auto& e : x.entries) {
    if (e.index >= 1 && e.index <= dimension) s += w[e.index - 1] * e.weight;
  }
  return s;
}

LinearModel train(std::span<const SparseVector> vectors, std::span<const std::string> classes,
                  std::size_t dimension, const TrainConfig& config,
                  std::vector<BinaryTrace>* traces) {
  config.validate();
  if (classes.empty()) throw TrainingError("no classes to train");
  std::vector<std::size_t> label_of(vectors.size());
  std::vector<std::size_t> support(classes.size(), 0);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (!vectors[i].label) throw TrainingError("training vector " + std::to_string(i + 1) + " has no label");
    auto it = std::find(classes.begin(), classes.end(), *vectors[i].label);
    if (it == classes.end()) throw TrainingError("training label '" + *vectors[i].label + "' is not a known class");
    label_of[i] = static_cast<std::size_t>(it - classes.begin());
    ++support[label_of[i]];
  }
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (support[c] == 0) throw TrainingError("class '" + classes[c] + "' has no training vectors");
  }

  LinearModel model;
  model.classes.assign(classes.begin(), classes.end());
  model.dimension = dimension;
  model.config = config;
  model.weights.resize(classes.size());
  model.intercepts.resize(classes.size());
  if (traces) traces->assign(classes.size(), {});

  auto solve = [&](std::size_t c) {
    std::vector<double> y(vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) y[i] = label_of[i] == c ? 1.0 : -1.0;
    TrainConfig sub = config;
    sub.seed = config.seed + 0x9E3779B97F4A7C15ULL * (c + 1);
    auto theta = train_binary(vectors, y, dimension, sub, traces ? &(*traces)[c] : nullptr);
    model.intercepts[c] = theta.back();
    theta.pop_back();
    model.weights[c] = std::move(theta);
  };

  // Each class writes only its own slots, so the problems run concurrently.
  std::vector<std::future<void>> jobs;
  for (std::size_t c = 1; c < classes.size(); ++c) jobs.push_back(std::async(std::launch::async, solve, c));
  solve(0);
  for (auto& job : jobs) job.get();
  return model;
}

std::size_t predict_index(const LinearModel& model, const SparseVector& x) {
  std::size_t best = 0;
  double best_score = model.decision(x, 0);
  for (std::size_t c = 1; c < model.classes.size(); ++c) {
    const double s = model.decision(x, c);
    if (s > best_score) best = c, best_score = s;
  }
  return best;
}

const std::string& predict(const LinearModel& model, const SparseVector& x) {
  return model.classes.at(predict_index(model, x));
}

}  // namespace termweight
