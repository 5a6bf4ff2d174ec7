#include "termweight/experiment.hpp"

#include <atomic>
#include <cstdio>
#include <exception>
#include <ostream>
#include <thread>

#include "termweight/error.hpp"

namespace termweight {
namespace {

template <class F>
auto stage(const char* name, F&& body) {
  const std::string prefix = std::string(name) + ": ";
  try {
    return body();
  } catch (const IngestError& e) {
    throw IngestError(prefix + e.what());
  } catch (const TrainingError& e) {
    throw TrainingError(prefix + e.what());
  } catch (const EvaluationError& e) {
    throw EvaluationError(prefix + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(prefix + e.what());
  } catch (const ContractViolation& e) {
    throw ContractViolation(prefix + e.what());
  }
}

}  // namespace

void check_test_labels(const Corpus& train, std::span<const LabeledDocument> test) {
  for (const auto& doc : test) {
    if (!train.find_class(doc.label)) {
      throw EvaluationError("test label '" + doc.label + "' does not occur in the training corpus");
    }
  }
}

CellResult run_cell(const Corpus& train, const CorpusStatistics& stats,
                    std::span<const LabeledDocument> test, const VectorizerConfig& vectorizer,
                    const TrainConfig& training) {
  CellResult cell;
  cell.weighting = stage("fit", [&] { return fit(train, stats, vectorizer); });
  const auto train_vectors = stage("transform", [&] {
    return transform_corpus(cell.weighting, train.documents(), &cell.train_diagnostics);
  });
  const auto test_vectors = stage("transform", [&] {
    return transform_corpus(cell.weighting, test, &cell.test_diagnostics);
  });
  const auto model = stage("train", [&] {
    return termweight::train(train_vectors, cell.weighting.classes, cell.weighting.size(), training);
  });
  cell.report = stage("evaluate", [&] { return evaluate(model, test_vectors); });
  return cell;
}

std::vector<GridRow> run_grid(const Corpus& train, std::span<const LabeledDocument> test,
                              const GridOptions& options) {
  check_test_labels(train, test);
  if (test.empty()) throw EvaluationError("evaluate: empty evaluation set");
  const auto stats = compute_counts(train);

  std::vector<GridRow> rows(kReportOrder.size());
  std::vector<std::exception_ptr> errors(kReportOrder.size());
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t r; (r = next.fetch_add(1)) < kReportOrder.size();) {
      try {
        GridRow row;
        row.metric = kReportOrder[r];
        for (std::size_t l = 0; l < kAllLocalSchemes.size(); ++l) {
          VectorizerConfig cfg = options.base;
          cfg.metric = row.metric;
          cfg.local.id = kAllLocalSchemes[l];
          const auto cell = run_cell(train, stats, test, cfg, options.training);
          row.f1[l] = cell.report.headline(options.mode);
          if (l == 0) row.stats = distribution_stats(scatter(cell.weighting, stats, options.axis));
        }
        rows[r] = row;
      } catch (...) {
        errors[r] = std::current_exception();
      }
    }
  };

  const unsigned threads = std::max(1u, std::min<unsigned>(options.threads, kReportOrder.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

void write_grid_tsv(std::ostream& out, std::span<const GridRow> rows, const GridOptions& options) {
  out << "# termweight grid seed=" << options.training.seed << " f1_mode=" << to_string(options.mode)
      << " agg=" << to_string(options.base.aggregation) << " cosine=" << (options.base.cosine ? 1 : 0)
      << " x=" << (options.axis == FrequencyAxis::DocumentFrequency ? "df" : "tf") << '\n';
  out << "metric";
  for (auto l : kAllLocalSchemes) out << '\t' << to_string(l);
  out << "\tsumstd\tstdy\tmeany\n";
  char buf[32];
  for (const auto& row : rows) {
    out << to_string(row.metric);
    for (double f : row.f1) {
      std::snprintf(buf, sizeof buf, "\t%.2f", 100.0 * f);
      out << buf;
    }
    std::snprintf(buf, sizeof buf, "\t%.3f", row.stats.sumstd);
    out << buf;
    std::snprintf(buf, sizeof buf, "\t%.3f", row.stats.stdy);
    out << buf;
    std::snprintf(buf, sizeof buf, "\t%.3f", row.stats.meany);
    out << buf << '\n';
  }
}

}  // namespace termweight
