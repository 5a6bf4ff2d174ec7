#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "termweight/termweight.hpp"

namespace termweight::cli {
namespace {

struct CorpusFlags {
  std::string format = "auto";
  bool no_lowercase = false;
  bool keep_punctuation = false;

  TokenizerConfig tokenizer() const { return {!no_lowercase, !keep_punctuation}; }
  bool any_tokenizer_flag() const { return no_lowercase || keep_punctuation; }

  void attach(CLI::App* app) {
    app->add_option("--format", format, "Corpus format")
        ->check(CLI::IsMember({"auto", "tsv", "jsonl"}))
        ->capture_default_str();
    app->add_flag("--no-lowercase", no_lowercase, "Keep the original letter case");
    app->add_flag("--keep-punctuation", keep_punctuation, "Do not trim punctuation off tokens");
  }
};

struct WeightingFlags {
  std::string global = "bl";
  std::string local = "tp";
  std::string agg = "max";
  bool no_cosine = false;
  double atf_k = 0.5;

  void attach(CLI::App* app) {
    std::vector<std::string> metrics;
    for (auto m : kAllGlobalMetrics) metrics.emplace_back(to_string(m));
    app->add_option("--global", global, "Global weighting metric")
        ->check(CLI::IsMember(metrics))
        ->capture_default_str();
    app->add_option("--local", local, "Local weighting scheme")
        ->check(CLI::IsMember({"tp", "tf", "atf", "logtf"}))
        ->capture_default_str();
    app->add_option("--agg", agg, "Aggregation over classes")
        ->check(CLI::IsMember({"max", "sum", "min"}))
        ->capture_default_str();
    app->add_flag("--no-cosine", no_cosine, "Disable cosine (L2) document normalization");
    app->add_option("--atf-k", atf_k, "Augmentation constant k of atf")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
  }

  VectorizerConfig config() const {
    VectorizerConfig cfg;
    cfg.metric = parse_global_metric(global);
    cfg.local = {parse_local_scheme(local), atf_k};
    cfg.aggregation = parse_aggregation(agg);
    cfg.cosine = !no_cosine;
    return cfg;
  }
};

class OutputFile {
 public:
  explicit OutputFile(const std::string& path) : path_(path), stream_(path, std::ios::binary) {
    if (!stream_) throw IoError("cannot open for writing: " + path);
  }
  std::ostream& stream() { return stream_; }
  void close() {
    stream_.close();
    if (!stream_) throw IoError("write failed: " + path_);
  }

 private:
  std::string path_;
  std::ofstream stream_;
};

void print_class_counts(std::ostream& out, const Corpus& corpus, const CorpusStatistics& stats) {
  out << "classes:";
  for (std::size_t c = 0; c < corpus.classes().size(); ++c) {
    out << ' ' << corpus.classes()[c] << '=' << stats.corpus.class_documents[c];
  }
  out << '\n';
}

void print_ingest(std::ostream& out, const Corpus& corpus) {
  const auto& d = corpus.diagnostics();
  out << "documents=" << corpus.size() << " vocabulary=" << corpus.vocabulary().size()
      << " dropped_empty=" << d.dropped_empty << '\n';
}

int cmd_fit(const std::string& train_path, const std::string& model_path, const CorpusFlags& cf,
            const WeightingFlags& wf, std::ostream& out) {
  const auto config = wf.config();
  const auto corpus = ingest_corpus(train_path, parse_corpus_format(cf.format), cf.tokenizer());
  const auto stats = compute_counts(corpus, std::max(1u, std::thread::hardware_concurrency()));
  const auto model = fit(corpus, stats, config);
  save_model(model_path, model);
  print_ingest(out, corpus);
  print_class_counts(out, corpus, stats);
  out << "model: " << model_path << " global=" << to_string(config.metric)
      << " local=" << to_string(config.local.id) << " agg=" << to_string(config.aggregation)
      << " cosine=" << (config.cosine ? 1 : 0) << '\n';
  return kExitOk;
}

int cmd_transform(const std::string& model_path, const std::string& corpus_path,
                  const std::string& out_path, const CorpusFlags& cf, std::ostream& out,
                  std::ostream& err) {
  const auto model = load_model(model_path);
  if (cf.any_tokenizer_flag() && cf.tokenizer() != model.tokenizer) {
    throw ConfigError("tokenizer options differ from those the model was fitted with");
  }
  const auto docs = read_documents(corpus_path, parse_corpus_format(cf.format), model.tokenizer);
  TransformDiagnostics diag;
  const auto vectors = transform_corpus(model, docs.documents, &diag);
  write_sparse_vectors(out_path, vectors);
  out << "vectors=" << vectors.size() << " oov_tokens=" << diag.oov_tokens
      << " empty_vectors=" << diag.empty_vectors
      << " dropped_empty=" << docs.diagnostics.dropped_empty << '\n';
  if (diag.empty_vectors > 0) {
    err << "warning: " << diag.empty_vectors << " document(s) have no in-vocabulary terms\n";
  }
  return kExitOk;
}

struct EvaluateFlags {
  std::string f1_mode = "macro";
  std::uint64_t seed = 42;
  double C = 1.0;
  double tolerance = 1e-4;
  int max_epochs = 1000;
  bool grid = false;
  std::string x = "df";
  unsigned threads = 0;
  std::string report_path;
};

int cmd_evaluate(const std::string& train_path, const std::string& test_path,
                 const CorpusFlags& cf, const WeightingFlags& wf, const EvaluateFlags& ef,
                 std::ostream& out) {
  const auto vectorizer = wf.config();
  const auto mode = parse_f1_mode(ef.f1_mode);
  TrainConfig training{ef.C, ef.tolerance, ef.max_epochs, ef.seed};
  training.validate();
  const auto format = parse_corpus_format(cf.format);

  const auto train = ingest_corpus(train_path, format, cf.tokenizer());
  const auto test = read_documents(test_path, format, cf.tokenizer());
  check_test_labels(train, test.documents);

  if (ef.grid) {
    GridOptions options;
    options.base = vectorizer;
    options.training = training;
    options.mode = mode;
    options.axis = parse_frequency_axis(ef.x);
    options.threads = ef.threads ? ef.threads : std::max(1u, std::thread::hardware_concurrency());
    const auto rows = run_grid(train, test.documents, options);
    if (ef.report_path.empty()) {
      write_grid_tsv(out, rows, options);
    } else {
      OutputFile file(ef.report_path);
      write_grid_tsv(file.stream(), rows, options);
      file.close();
      out << "grid report: " << ef.report_path << " (" << rows.size() << " metrics)\n";
    }
    return kExitOk;
  }

  const auto stats = compute_counts(train);
  const auto cell = run_cell(train, stats, test.documents, vectorizer, training);
  // Fail early (exit 1) if posneg was requested but the classes lack it.
  cell.report.headline(mode);
  const ReportContext ctx{std::string(to_string(vectorizer.metric)),
                          std::string(to_string(vectorizer.local.id)), ef.seed, mode};
  out << "# seed=" << ef.seed << '\n';
  write_report_text(out, cell.report, ctx);
  out << "test oov_tokens=" << cell.test_diagnostics.oov_tokens
      << " empty_vectors=" << cell.test_diagnostics.empty_vectors << '\n';
  if (!ef.report_path.empty()) {
    OutputFile file(ef.report_path);
    write_report_tsv(file.stream(), cell.report, ctx);
    file.close();
  }
  return kExitOk;
}

int cmd_analyze(const std::string& model_path, const std::string& corpus_path,
                const std::string& scatter_path, const std::string& stats_path,
                const std::string& x, const CorpusFlags& cf, std::ostream& out) {
  const auto axis = parse_frequency_axis(x);
  const auto model = load_model(model_path);
  std::vector<ScatterPoint> points;
  if (axis == FrequencyAxis::TermFrequency || !corpus_path.empty()) {
    if (corpus_path.empty()) throw ConfigError("--x tf needs the training corpus (--corpus)");
    const auto corpus = ingest_corpus(corpus_path, parse_corpus_format(cf.format), model.tokenizer);
    if (corpus.vocabulary().terms() != model.vocabulary.terms()) {
      throw IngestError("corpus " + corpus_path + " is not the corpus the model was fitted on");
    }
    points = scatter(model, compute_counts(corpus), axis);
  } else {
    points = scatter(model);
  }
  const MetricStats row{model.config.metric, distribution_stats(points)};

  if (!scatter_path.empty()) {
    OutputFile file(scatter_path);
    write_scatter_csv(file.stream(), points);
    file.close();
  }
  if (!stats_path.empty()) {
    OutputFile file(stats_path);
    write_stats_csv(file.stream(), std::span(&row, 1));
    file.close();
  }
  write_stats_csv(out, std::span(&row, 1));
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Supervised term weighting for short-text classification", "termweight"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  CorpusFlags corpus_flags;
  WeightingFlags weighting;
  EvaluateFlags eval;

  std::string train_path, test_path, model_path, corpus_path, out_path;
  std::string scatter_path, stats_path, x_axis = "df";

  auto* fit_cmd = app.add_subcommand("fit", "Fit a weighting model on a labeled corpus");
  fit_cmd->add_option("train", train_path, "Training corpus")->required()->check(CLI::ExistingFile);
  fit_cmd->add_option("-o,--output", out_path, "Model file to write")->required();
  corpus_flags.attach(fit_cmd);
  weighting.attach(fit_cmd);

  auto* transform_cmd = app.add_subcommand("transform", "Write weighted sparse vectors for a corpus");
  transform_cmd->add_option("model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  transform_cmd->add_option("corpus", corpus_path, "Corpus to transform")
      ->required()
      ->check(CLI::ExistingFile);
  transform_cmd->add_option("-o,--output", out_path, "Sparse vector file to write")->required();
  corpus_flags.attach(transform_cmd);

  auto* eval_cmd = app.add_subcommand("evaluate", "Fit, train and evaluate a linear classifier");
  eval_cmd->add_option("train", train_path, "Training corpus")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("test", test_path, "Test corpus")->required()->check(CLI::ExistingFile);
  corpus_flags.attach(eval_cmd);
  weighting.attach(eval_cmd);
  eval_cmd->add_option("--f1-mode", eval.f1_mode, "F1 average")
      ->check(CLI::IsMember({"macro", "posneg"}))
      ->capture_default_str();
  eval_cmd->add_option("--seed", eval.seed, "Seed for the optimizer's coordinate order")
      ->capture_default_str();
  eval_cmd->add_option("-C,--cost", eval.C, "Regularization strength C")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cmd->add_option("--tolerance", eval.tolerance, "Relative gradient tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cmd->add_option("--max-epochs", eval.max_epochs, "Optimizer epoch limit")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  eval_cmd->add_flag("--grid", eval.grid, "Run every global x local combination");
  eval_cmd->add_option("--x", eval.x, "Frequency axis for the grid statistics")
      ->check(CLI::IsMember({"df", "tf"}))
      ->capture_default_str();
  eval_cmd->add_option("--threads", eval.threads, "Worker threads for --grid (0 = all cores)");
  eval_cmd->add_option("-o,--output", eval.report_path, "Report TSV to write");

  auto* analyze_cmd = app.add_subcommand("analyze", "Score distribution statistics of a model");
  analyze_cmd->add_option("model", model_path, "Model file")->required()->check(CLI::ExistingFile);
  analyze_cmd->add_option("--corpus", corpus_path, "Training corpus (needed for --x tf)")
      ->check(CLI::ExistingFile);
  analyze_cmd->add_option("--scatter", scatter_path, "Scatter CSV to write (term,frequency,score)");
  analyze_cmd->add_option("--stats", stats_path, "Stats CSV to write (metric,meany,stdy,sumstd)");
  analyze_cmd->add_option("--x", x_axis, "Frequency axis")
      ->check(CLI::IsMember({"df", "tf"}))
      ->capture_default_str();
  analyze_cmd->add_option("--format", corpus_flags.format, "Corpus format")
      ->check(CLI::IsMember({"auto", "tsv", "jsonl"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "termweight: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (fit_cmd->parsed()) return cmd_fit(train_path, out_path, corpus_flags, weighting, out);
    if (transform_cmd->parsed()) {
      return cmd_transform(model_path, corpus_path, out_path, corpus_flags, out, err);
    }
    if (eval_cmd->parsed()) {
      return cmd_evaluate(train_path, test_path, corpus_flags, weighting, eval, out);
    }
    if (analyze_cmd->parsed()) {
      return cmd_analyze(model_path, corpus_path, scatter_path, stats_path, x_axis, corpus_flags, out);
    }
  } catch (const ConfigError& e) {
    err << "termweight: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "termweight: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

}  // namespace termweight::cli
