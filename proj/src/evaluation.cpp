#include "termweight/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>

#include "termweight/error.hpp"
#include "termweight/io.hpp"

namespace termweight {

std::string_view to_string(F1Mode mode) {
  return mode == F1Mode::MacroAll ? "macro" : "posneg";
}

F1Mode parse_f1_mode(std::string_view name) {
  if (name == "macro" || name == "macro-all") return F1Mode::MacroAll;
  if (name == "posneg" || name == "posneg-average") return F1Mode::PosNegAverage;
  throw ConfigError("unknown F1 mode '" + std::string(name) + "' (expected macro or posneg)");
}

double EvaluationReport::headline(F1Mode mode) const {
  if (mode == F1Mode::MacroAll) return macro_f1;
  if (!posneg_f1) throw EvaluationError("posneg F1 needs a positive and a negative class");
  return *posneg_f1;
}

namespace {

double safe_ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

std::optional<std::size_t> find_any(std::span<const std::string> classes,
                                    std::initializer_list<std::string_view> names) {
  for (auto name : names) {
    auto it = std::find(classes.begin(), classes.end(), name);
    if (it != classes.end()) return static_cast<std::size_t>(it - classes.begin());
  }
  return std::nullopt;
}

}  // namespace

EvaluationReport score_predictions(std::span<const std::string> classes,
                                   std::span<const std::size_t> gold,
                                   std::span<const std::size_t> predicted) {
  if (gold.size() != predicted.size()) throw ContractViolation("gold/predicted length mismatch");
  if (gold.empty()) throw EvaluationError("empty evaluation set");
  const std::size_t k = classes.size();
  EvaluationReport report;
  report.documents = gold.size();
  report.confusion.assign(k, std::vector<std::size_t>(k, 0));
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i] >= k || predicted[i] >= k) throw ContractViolation("class index out of range");
    ++report.confusion[gold[i]][predicted[i]];
  }

  std::size_t correct = 0;
  double f1_sum = 0.0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t tp = report.confusion[c][c];
    std::size_t gold_total = 0, pred_total = 0;
    for (std::size_t j = 0; j < k; ++j) {
      gold_total += report.confusion[c][j];
      pred_total += report.confusion[j][c];
    }
    ClassScores s;
    s.name = classes[c];
    s.support = gold_total;
    s.precision = safe_ratio(tp, pred_total);
    s.recall = safe_ratio(tp, gold_total);
    // 2PR/(P+R) == 2tp/(gold+pred); the count form avoids rounding.
    s.f1 = safe_ratio(2 * tp, gold_total + pred_total);
    correct += tp;
    f1_sum += s.f1;
    report.per_class.push_back(std::move(s));
  }
  report.macro_f1 = f1_sum / static_cast<double>(k);
  report.accuracy = safe_ratio(correct, gold.size());

  const auto pos = find_any(classes, {"positive", "pos"});
  const auto neg = find_any(classes, {"negative", "neg"});
  if (pos && neg) report.posneg_f1 = 0.5 * (report.per_class[*pos].f1 + report.per_class[*neg].f1);
  return report;
}

EvaluationReport evaluate(const LinearModel& model, std::span<const SparseVector> vectors) {
  if (vectors.empty()) throw EvaluationError("empty evaluation set");
  std::vector<std::size_t> gold, predicted;
  gold.reserve(vectors.size());
  predicted.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i];
    if (!v.label) throw EvaluationError("evaluation vector " + std::to_string(i + 1) + " has no label");
    auto it = std::find(model.classes.begin(), model.classes.end(), *v.label);
    if (it == model.classes.end()) {
      throw EvaluationError("label '" + *v.label + "' is not one of the model's classes");
    }
    gold.push_back(static_cast<std::size_t>(it - model.classes.begin()));
    predicted.push_back(predict_index(model, v));
  }
  return score_predictions(model.classes, gold, predicted);
}

void write_report_tsv(std::ostream& out, const EvaluationReport& r, const ReportContext& ctx) {
  out << "# termweight evaluation global=" << ctx.metric << " local=" << ctx.local
      << " seed=" << ctx.seed << " f1_mode=" << to_string(ctx.mode) << '\n';
  out << "class\tprecision\trecall\tf1\tsupport\n";
  for (const auto& s : r.per_class) {
    out << s.name << '\t' << format_number(s.precision, 6) << '\t' << format_number(s.recall, 6)
        << '\t' << format_number(s.f1, 6) << '\t' << s.support << '\n';
  }
  out << "macro\t\t\t" << format_number(r.macro_f1, 6) << '\t' << r.documents << '\n';
  if (r.posneg_f1) out << "posneg\t\t\t" << format_number(*r.posneg_f1, 6) << '\t' << r.documents << '\n';
}

void write_report_text(std::ostream& out, const EvaluationReport& r, const ReportContext& ctx) {
  char line[256];
  out << "global=" << ctx.metric << " local=" << ctx.local << " seed=" << ctx.seed
      << " documents=" << r.documents << '\n';
  std::snprintf(line, sizeof line, "%-12s %9s %9s %9s %8s\n", "class", "precision", "recall", "f1",
                "support");
  out << line;
  for (const auto& s : r.per_class) {
    std::snprintf(line, sizeof line, "%-12s %9.4f %9.4f %9.4f %8zu\n", s.name.c_str(), s.precision,
                  s.recall, s.f1, s.support);
    out << line;
  }
  std::snprintf(line, sizeof line, "accuracy %.4f  macro-F1 %.4f", r.accuracy, r.macro_f1);
  out << line;
  if (r.posneg_f1) {
    std::snprintf(line, sizeof line, "  posneg-F1 %.4f", *r.posneg_f1);
    out << line;
  }
  out << '\n';
  out << "confusion (rows gold, columns predicted):\n";
  for (std::size_t g = 0; g < r.confusion.size(); ++g) {
    std::snprintf(line, sizeof line, "  %-10s", r.per_class[g].name.c_str());
    out << line;
    for (auto n : r.confusion[g]) {
      std::snprintf(line, sizeof line, " %7zu", n);
      out << line;
    }
    out << '\n';
  }
}

}  // namespace termweight
