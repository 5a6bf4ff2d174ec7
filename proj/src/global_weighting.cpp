#include "termweight/global_weighting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "termweight/error.hpp"

namespace termweight {

std::string_view to_string(GlobalMetric metric) {
  switch (metric) {
    case GlobalMetric::Baseline: return "bl";
    case GlobalMetric::DeltaSmoothedIdf: return "dsidf";
    case GlobalMetric::DeltaBm25Idf: return "dbidf";
    case GlobalMetric::RelevanceFrequency: return "rf";
    case GlobalMetric::InformationGain: return "ig";
    case GlobalMetric::PointwiseMutualInformation: return "pmi";
    case GlobalMetric::NaturalEntropy: return "ne";
    case GlobalMetric::ChiSquare: return "chi";
    case GlobalMetric::NglCoefficient: return "ngl";
    case GlobalMetric::ClassDiscrimination: return "cdm";
    case GlobalMetric::CategoricalProportionalDifference: return "cpd";
    case GlobalMetric::MultinomialZScore: return "zd";
    case GlobalMetric::KullbackLeibler: return "kl";
    case GlobalMetric::WeightedLogLikelihoodRatio: return "wllr";
    case GlobalMetric::OddsRatio: return "orr";
  }
  return "?";
}

std::string global_metric_names() {
  std::string names;
  for (auto m : kAllGlobalMetrics) {
    if (!names.empty()) names += ", ";
    names += to_string(m);
  }
  return names;
}

GlobalMetric parse_global_metric(std::string_view name) {
  for (auto m : kAllGlobalMetrics) {
    if (to_string(m) == name) return m;
  }
  throw ConfigError("unknown global metric '" + std::string(name) +
                    "' (expected one of: " + global_metric_names() + ")");
}

std::string_view to_string(Aggregation rule) {
  switch (rule) {
    case Aggregation::Max: return "max";
    case Aggregation::Sum: return "sum";
    case Aggregation::Min: return "min";
  }
  return "?";
}

Aggregation parse_aggregation(std::string_view name) {
  if (name == "max") return Aggregation::Max;
  if (name == "sum") return Aggregation::Sum;
  if (name == "min") return Aggregation::Min;
  throw ConfigError("unknown aggregation '" + std::string(name) +
                    "' (expected one of: max, sum, min)");
}

namespace {

class Log {
 public:
  explicit Log(double base) : scale_(base > 0.0 ? std::log(base) : 1.0) {
    if (base != 0.0 && !(base > 1.0)) throw ConfigError("log base must exceed 1");
  }
  double operator()(double x) const { return std::log(x) / scale_; }
  // log(num / den) taken as a difference, so swapping the arguments negates it exactly.
  double ratio(double num, double den) const { return (std::log(num) - std::log(den)) / scale_; }
  // x * log(x / y) with the 0 * log 0 = 0 convention.
  double xlog(double x, double y) const { return x == 0.0 ? 0.0 : x * (*this)(x / y); }

 private:
  double scale_;
};

double clamp_low(Count count) { return std::max(static_cast<double>(count), 0.5); }

double clamp_both(Count count, double limit) {
  return std::clamp(static_cast<double>(count), 0.5, limit - 0.5);
}

double nonempty(Count limit) { return static_cast<double>(std::max<Count>(limit, 1)); }

// Signed cross product df_c * dbar_cbar - dfbar_c * dbar_c of the 2x2
// presence/class table, and the product of its four margins.
std::pair<double, double> contingency(const TermCounts& t, const CorpusCounts& n, ClassIndex c) {
  const double a = static_cast<double>(t.class_df[c]);
  const double b = static_cast<double>(t.df_outside(c));
  const double cc = static_cast<double>(t.absent_in(n, c));
  const double d = static_cast<double>(t.absent_outside(n, c));
  const double cross = a * d - b * cc;
  const double margins = static_cast<double>(t.df) * static_cast<double>(t.absent(n)) *
                         static_cast<double>(n.class_documents[c]) *
                         static_cast<double>(n.outside(c));
  return {cross, margins};
}

}  // namespace

double global_score(GlobalMetric metric, const TermCounts& t, const CorpusCounts& n,
                    ClassIndex c, const ScoringOptions& options) {
  const Log lg(options.log_base);
  const double N = static_cast<double>(n.documents);
  const double Nc = static_cast<double>(n.class_documents.at(c));
  const double Nbar = static_cast<double>(n.outside(c));
  const double df = static_cast<double>(t.df);
  const double dfc = static_cast<double>(t.class_df[c]);
  const double dfbar = static_cast<double>(t.df_outside(c));

  switch (metric) {
    case GlobalMetric::Baseline:
      return 1.0;

    case GlobalMetric::DeltaSmoothedIdf:
      return lg.ratio(Nc * dfbar + 0.5, Nbar * dfc + 0.5);

    case GlobalMetric::DeltaBm25Idf:
      return lg.ratio((Nc - dfc + 0.5) * dfbar + 0.5, (Nbar - dfbar + 0.5) * dfc + 0.5);

    case GlobalMetric::RelevanceFrequency:
      return lg(2.0 + dfc / std::max(1.0, dfbar));

    case GlobalMetric::InformationGain: {
      const double absent = static_cast<double>(t.absent(n));
      double prior = 0.0, present = 0.0, missing = 0.0;
      for (std::size_t k = 0; k < n.num_classes(); ++k) {
        const double pk = static_cast<double>(n.class_documents[k]) / N;
        prior -= lg.xlog(pk, 1.0);
        present += lg.xlog(static_cast<double>(t.class_df[k]) / df, 1.0);
        if (absent > 0.0) {
          missing += lg.xlog(static_cast<double>(t.absent_in(n, k)) / absent, 1.0);
        }
      }
      return prior + (df / N) * present + (absent / N) * missing;
    }

    case GlobalMetric::PointwiseMutualInformation:
      return lg(clamp_low(t.class_df[c]) * N / (Nc * df));

    case GlobalMetric::NaturalEntropy:
      return 1.0 + lg.xlog(dfc / df, 1.0) + lg.xlog(dfbar / df, 1.0);

    case GlobalMetric::ChiSquare: {
      const auto [cross, margins] = contingency(t, n, c);
      return margins == 0.0 ? 0.0 : N * cross * cross / margins;
    }

    case GlobalMetric::NglCoefficient: {
      const auto [cross, margins] = contingency(t, n, c);
      return margins == 0.0 ? 0.0 : std::sqrt(N) * cross / std::sqrt(margins);
    }

    case GlobalMetric::ClassDiscrimination: {
      const double in = clamp_low(t.class_df[c]) / Nc;
      const double out = clamp_low(t.df_outside(c)) / nonempty(n.outside(c));
      return std::abs(lg(in / out));
    }

    case GlobalMetric::CategoricalProportionalDifference:
      return (dfc - dfbar) / df;

    case GlobalMetric::MultinomialZScore: {
      const double total = nonempty(n.documents);
      const double pf = clamp_both(t.df, total) / total;
      const double tfc = static_cast<double>(t.class_tf.at(c));
      return (tfc - pf * Nc) / std::sqrt(Nc * pf * (1.0 - pf));
    }

    case GlobalMetric::KullbackLeibler:
      return lg.xlog(dfc / df, Nc / N);

    case GlobalMetric::WeightedLogLikelihoodRatio: {
      const double in = dfc / Nc;
      const double out = clamp_low(t.df_outside(c)) / nonempty(n.outside(c));
      return lg.xlog(in, out);
    }

    case GlobalMetric::OddsRatio: {
      const double in_limit = nonempty(n.class_documents[c]);
      const double out_limit = nonempty(n.outside(c));
      const double in = clamp_both(t.class_df[c], in_limit) / in_limit;
      const double out = clamp_both(t.df_outside(c), out_limit) / out_limit;
      return lg((in * (1.0 - out)) / (out * (1.0 - in)));
    }
  }
  throw ConfigError("unhandled global metric");
}

double aggregate(std::span<const double> scores, Aggregation rule) {
  if (scores.empty()) throw ContractViolation("aggregate: no class scores");
  switch (rule) {
    case Aggregation::Max: return *std::max_element(scores.begin(), scores.end());
    case Aggregation::Min: return *std::min_element(scores.begin(), scores.end());
    case Aggregation::Sum: return std::accumulate(scores.begin(), scores.end(), 0.0);
  }
  throw ConfigError("unhandled aggregation rule");
}

TermScoreTable score_vocabulary(GlobalMetric metric, const CorpusStatistics& stats,
                                Aggregation rule, const ScoringOptions& options) {
  TermScoreTable table;
  table.metric = metric;
  table.aggregation = rule;
  const std::size_t classes = stats.corpus.num_classes();
  table.raw.resize(stats.terms.size());
  table.aggregated.resize(stats.terms.size());
  for (std::size_t i = 0; i < stats.terms.size(); ++i) {
    auto& row = table.raw[i];
    row.resize(classes);
    for (std::size_t c = 0; c < classes; ++c) {
      row[c] = global_score(metric, stats.terms[i], stats.corpus, c, options);
    }
    table.aggregated[i] = aggregate(row, rule);
  }
  return table;
}

}  // namespace termweight
