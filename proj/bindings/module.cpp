#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "termweight/termweight.hpp"

namespace py = pybind11;
using namespace termweight;

namespace {

using PyEntries = std::vector<std::pair<TermIndex, double>>;

PyEntries to_py(const SparseVector& v) {
  PyEntries out;
  out.reserve(v.entries.size());
  for (const auto& e : v.entries) out.emplace_back(e.index, e.weight);
  return out;
}

SparseVector from_py(const PyEntries& entries, std::optional<std::string> label) {
  SparseVector v;
  v.label = std::move(label);
  for (const auto& [i, w] : entries) v.entries.push_back({i, w});
  return v;
}

Corpus corpus_from_records(const std::vector<std::pair<std::string, std::string>>& records,
                           bool lowercase, bool strip_punctuation) {
  const TokenizerConfig config{lowercase, strip_punctuation};
  std::vector<LabeledDocument> docs;
  IngestDiagnostics diag;
  for (const auto& [label, text] : records) {
    ++diag.records;
    auto tokens = tokenize(text, config);
    if (tokens.empty()) {
      ++diag.dropped_empty;
      continue;
    }
    docs.push_back({label, text, std::move(tokens)});
  }
  return Corpus::build(std::move(docs), config, diag);
}

ClassIndex class_index(const Corpus& corpus, const std::string& label) {
  auto c = corpus.find_class(label);
  if (!c) throw py::key_error("unknown class '" + label + "'");
  return *c;
}

TermIndex term_index(const Vocabulary& vocab, const std::string& term) {
  auto t = vocab.find(term);
  if (!t) throw py::key_error("term not in vocabulary: '" + term + "'");
  return *t;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Supervised term weighting: metrics, vectorizer and linear classifier";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<IngestError>(m, "IngestError", PyExc_ValueError);
  py::register_exception<ContractViolation>(m, "ContractViolation", PyExc_ValueError);
  py::register_exception<TrainingError>(m, "TrainingError", PyExc_RuntimeError);
  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);

  m.attr("GLOBAL_METRICS") = [] {
    std::vector<std::string> names;
    for (auto g : kAllGlobalMetrics) names.emplace_back(to_string(g));
    return names;
  }();
  m.attr("LOCAL_SCHEMES") = std::vector<std::string>{"tp", "tf", "atf", "logtf"};

  m.def("tokenize",
        [](const std::string& text, bool lowercase, bool strip_punctuation) {
          return tokenize(text, {lowercase, strip_punctuation});
        },
        py::arg("text"), py::arg("lowercase") = true, py::arg("strip_punctuation") = true);

  m.def("local_weight",
        [](const std::string& scheme, long tf, long max_tf, double k) {
          return local_weight({parse_local_scheme(scheme), k}, tf, max_tf);
        },
        py::arg("scheme"), py::arg("tf"), py::arg("max_tf"), py::arg("k") = 0.5);

  m.def("minmax_normalize",
        [](const std::vector<double>& scores) { return minmax_normalize(scores); });

  m.def("aggregate",
        [](const std::vector<double>& scores, const std::string& rule) {
          return aggregate(scores, parse_aggregation(rule));
        },
        py::arg("scores"), py::arg("rule") = "max");

  py::class_<Corpus>(m, "Corpus")
      .def_static("from_records", &corpus_from_records, py::arg("records"),
                  py::arg("lowercase") = true, py::arg("strip_punctuation") = true,
                  "Build from (label, text) pairs; empty documents are dropped.")
      .def_static("from_file",
                  [](const std::string& path, const std::string& format) {
                    return ingest_corpus(path, parse_corpus_format(format));
                  },
                  py::arg("path"), py::arg("format") = "auto")
      .def_property_readonly("classes", &Corpus::classes)
      .def_property_readonly("vocabulary", [](const Corpus& c) { return c.vocabulary().terms(); })
      .def_property_readonly("dropped_empty",
                             [](const Corpus& c) { return c.diagnostics().dropped_empty; })
      .def("__len__", &Corpus::size)
      .def("term_counts",
           [](const Corpus& c, const std::string& term) {
             const auto stats = compute_counts(c);
             const auto& t = stats.term(term_index(c.vocabulary(), term));
             py::dict d;
             d["df"] = t.df;
             d["tf"] = t.tf;
             py::dict df_c, tf_c;
             for (std::size_t k = 0; k < c.classes().size(); ++k) {
               df_c[py::str(c.classes()[k])] = t.class_df[k];
               tf_c[py::str(c.classes()[k])] = t.class_tf[k];
             }
             d["df_c"] = df_c;
             d["tf_c"] = tf_c;
             return d;
           })
      .def("global_score",
           [](const Corpus& c, const std::string& metric, const std::string& term,
              const std::string& label) {
             const auto stats = compute_counts(c);
             return global_score(parse_global_metric(metric),
                                 stats.term(term_index(c.vocabulary(), term)), stats.corpus,
                                 class_index(c, label));
           },
           py::arg("metric"), py::arg("term"), py::arg("label"));

  py::class_<WeightingModel>(m, "WeightingModel")
      .def_property_readonly("terms", [](const WeightingModel& w) { return w.vocabulary.terms(); })
      .def_property_readonly("classes", [](const WeightingModel& w) { return w.classes; })
      .def_property_readonly("aggregated", [](const WeightingModel& w) { return w.aggregated; })
      .def_property_readonly("normalized", [](const WeightingModel& w) { return w.normalized; })
      .def_property_readonly("metric",
                             [](const WeightingModel& w) { return std::string(to_string(w.config.metric)); })
      .def("__len__", &WeightingModel::size)
      .def("score", [](const WeightingModel& w, const std::string& term) {
        return w.normalized_score(term_index(w.vocabulary, term));
      })
      .def("transform",
           [](const WeightingModel& w, const std::string& text) {
             return to_py(transform(w, tokenize(text, w.tokenizer)));
           },
           "Weighted sparse vector of a text as [(index, weight), ...].")
      .def("save", [](const WeightingModel& w, const std::string& path) { save_model(path, w); })
      .def_static("load", [](const std::string& path) { return load_model(path); });

  m.def("fit",
        [](const Corpus& corpus, const std::string& global, const std::string& local,
           const std::string& agg, bool cosine, double atf_k) {
          VectorizerConfig cfg;
          cfg.metric = parse_global_metric(global);
          cfg.local = {parse_local_scheme(local), atf_k};
          cfg.aggregation = parse_aggregation(agg);
          cfg.cosine = cosine;
          return fit(corpus, cfg);
        },
        py::arg("corpus"), py::arg("global_metric") = "bl", py::arg("local") = "tp",
        py::arg("agg") = "max", py::arg("cosine") = true, py::arg("atf_k") = 0.5);

  m.def("distribution_stats",
        [](const std::vector<std::pair<Count, double>>& points) {
          std::vector<ScatterPoint> pts;
          for (const auto& [x, y] : points) pts.push_back({"", x, y});
          const auto s = distribution_stats(pts);
          return py::dict(py::arg("meany") = s.meany, py::arg("stdy") = s.stdy,
                          py::arg("sumstd") = s.sumstd);
        },
        py::arg("points"), "Statistics of (frequency, score) points.");

  m.def("analyze", [](const WeightingModel& w) {
    const auto s = distribution_stats(scatter(w));
    return py::dict(py::arg("meany") = s.meany, py::arg("stdy") = s.stdy,
                    py::arg("sumstd") = s.sumstd);
  });

  py::class_<LinearModel>(m, "LinearModel")
      .def_property_readonly("classes", [](const LinearModel& l) { return l.classes; })
      .def_property_readonly("weights", [](const LinearModel& l) { return l.weights; })
      .def_property_readonly("intercepts", [](const LinearModel& l) { return l.intercepts; })
      .def("predict", [](const LinearModel& l, const PyEntries& x) {
        return predict(l, from_py(x, std::nullopt));
      });

  m.def("train",
        [](const std::vector<PyEntries>& vectors, const std::vector<std::string>& labels,
           const std::vector<std::string>& classes, std::size_t dimension, double C,
           std::uint64_t seed) {
          if (vectors.size() != labels.size()) throw ContractViolation("one label per vector");
          std::vector<SparseVector> rows;
          for (std::size_t i = 0; i < vectors.size(); ++i) rows.push_back(from_py(vectors[i], labels[i]));
          TrainConfig cfg;
          cfg.C = C;
          cfg.seed = seed;
          return train(rows, classes, dimension, cfg);
        },
        py::arg("vectors"), py::arg("labels"), py::arg("classes"), py::arg("dimension"),
        py::arg("C") = 1.0, py::arg("seed") = 42);

  m.def("score_predictions",
        [](const std::vector<std::string>& classes, const std::vector<std::size_t>& gold,
           const std::vector<std::size_t>& predicted) {
          const auto r = score_predictions(classes, gold, predicted);
          py::dict f1;
          for (const auto& s : r.per_class) f1[py::str(s.name)] = s.f1;
          py::dict d;
          d["f1"] = f1;
          d["macro_f1"] = r.macro_f1;
          d["accuracy"] = r.accuracy;
          d["confusion"] = r.confusion;
          if (r.posneg_f1) d["posneg_f1"] = *r.posneg_f1;
          return d;
        });
}
