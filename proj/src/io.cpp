#include "termweight/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "termweight/error.hpp"

namespace termweight {
namespace {

constexpr const char* kModelMagic = "# termweight-model v1";
constexpr const char* kVectorHeader = "# termweight sparse vectors v1";

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> parts;
  for (std::string p; in >> p;) parts.push_back(p);
  return parts;
}

double parse_double(const std::string& s, std::size_t line) {
  // strtod accepts the "inf"/"nan" spellings we never write; reject them.
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw IngestError("invalid number '" + s + "'", line);
  }
  return v;
}

long long parse_int(const std::string& s, std::size_t line) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw IngestError("invalid integer '" + s + "'", line);
  }
  return v;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open: " + path);
  return in;
}

void check_written(std::ostream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

}  // namespace

std::string format_number(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

void write_sparse_vectors(std::ostream& out, std::span<const SparseVector> vectors) {
  out << kVectorHeader << " documents=" << vectors.size() << '\n';
  for (const auto& v : vectors) {
    out << (v.label ? *v.label : std::string("_"));
    for (const auto& e : v.entries) out << ' ' << e.index << ':' << format_number(e.weight, 6);
    out << '\n';
  }
}

void write_sparse_vectors(const std::string& path, std::span<const SparseVector> vectors) {
  auto out = open_out(path);
  write_sparse_vectors(out, vectors);
  check_written(out, path);
}

std::vector<SparseVector> read_sparse_vectors(std::istream& in) {
  std::vector<SparseVector> vectors;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const auto fields = split_ws(line);
    if (fields.empty()) continue;
    SparseVector v;
    if (fields[0] != "_") v.label = fields[0];
    for (std::size_t k = 1; k < fields.size(); ++k) {
      const auto colon = fields[k].find(':');
      if (colon == std::string::npos) throw IngestError("expected idx:weight", lineno);
      const auto index = parse_int(fields[k].substr(0, colon), lineno);
      if (index < 1) throw IngestError("index must be positive", lineno);
      if (!v.entries.empty() && static_cast<long long>(v.entries.back().index) >= index) {
        throw IngestError("indices not strictly ascending", lineno);
      }
      v.entries.push_back({static_cast<TermIndex>(index),
                           parse_double(fields[k].substr(colon + 1), lineno)});
    }
    vectors.push_back(std::move(v));
  }
  return vectors;
}

std::vector<SparseVector> read_sparse_vectors(const std::string& path) {
  auto in = open_in(path);
  try {
    return read_sparse_vectors(in);
  } catch (const IngestError& e) {
    throw IngestError(path + ": " + e.what());
  }
}

void write_score_table(std::ostream& out, const WeightingModel& model) {
  out << "term\tindex\tdf";
  for (const auto& c : model.classes) out << "\traw_" << c;
  out << "\taggregated\n";
  for (std::size_t i = 0; i < model.size(); ++i) {
    out << model.vocabulary.terms()[i] << '\t' << (i + 1) << '\t' << model.document_frequency[i];
    for (double s : model.raw[i]) out << '\t' << format_number(s, 17);
    out << '\t' << format_number(model.aggregated[i], 17) << '\n';
  }
}

void save_model(std::ostream& out, const WeightingModel& model) {
  const auto& cfg = model.config;
  out << kModelMagic << '\n';
  out << "metric=" << to_string(cfg.metric) << '\n';
  out << "aggregation=" << to_string(cfg.aggregation) << '\n';
  out << "local=" << to_string(cfg.local.id) << '\n';
  out << "atf_k=" << format_number(cfg.local.k, 17) << '\n';
  out << "cosine=" << (cfg.cosine ? 1 : 0) << '\n';
  out << "log_base=" << (cfg.scoring.log_base == 0.0 ? std::string("e")
                                                      : format_number(cfg.scoring.log_base, 17))
      << '\n';
  out << "tokenizer=default\n";
  out << "lowercase=" << (model.tokenizer.lowercase ? 1 : 0) << '\n';
  out << "strip_punctuation=" << (model.tokenizer.strip_punctuation ? 1 : 0) << '\n';
  out << "classes=";
  for (std::size_t c = 0; c < model.classes.size(); ++c) out << (c ? " " : "") << model.classes[c];
  out << '\n';
  out << "vocabulary_size=" << model.size() << '\n';
  out << "score_min=" << format_number(model.score_min, 17) << '\n';
  out << "score_max=" << format_number(model.score_max, 17) << '\n';
  write_score_table(out, model);
}

void save_model(const std::string& path, const WeightingModel& model) {
  auto out = open_out(path);
  save_model(out, model);
  check_written(out, path);
}

WeightingModel load_model(std::istream& in) {
  std::string line;
  std::size_t lineno = 1;
  if (!std::getline(in, line) || line.rfind(kModelMagic, 0) != 0) {
    throw IngestError("not a termweight model (missing '" + std::string(kModelMagic) + "')", 1);
  }

  std::map<std::string, std::string> kv;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.rfind("term\t", 0) == 0) {
      header_seen = true;
      break;
    }
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw IngestError("expected key=value", lineno);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  if (!header_seen) throw IngestError("missing score table header", lineno);

  auto get = [&](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end()) throw IngestError("missing model key '" + key + "'");
    return it->second;
  };

  WeightingModel model;
  auto& cfg = model.config;
  cfg.metric = parse_global_metric(get("metric"));
  cfg.aggregation = parse_aggregation(get("aggregation"));
  cfg.local.id = parse_local_scheme(get("local"));
  cfg.local.k = parse_double(get("atf_k"), 0);
  cfg.cosine = get("cosine") == "1";
  const auto& base = get("log_base");
  cfg.scoring.log_base = base == "e" ? 0.0 : parse_double(base, 0);
  if (get("tokenizer") != "default") throw ConfigError("unsupported tokenizer '" + get("tokenizer") + "'");
  model.tokenizer.lowercase = get("lowercase") == "1";
  model.tokenizer.strip_punctuation = get("strip_punctuation") == "1";
  model.classes = split_ws(get("classes"));
  if (model.classes.empty()) throw IngestError("model has no classes");
  const auto vocab_size = static_cast<std::size_t>(parse_int(get("vocabulary_size"), 0));

  const std::size_t columns = 4 + model.classes.size();
  if (split(line, '\t').size() != columns) throw IngestError("score table header width", lineno);
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    const auto f = split(line, '\t');
    if (f.size() != columns) throw IngestError("score table row has wrong width", lineno);
    const auto index = parse_int(f[1], lineno);
    if (model.vocabulary.add(f[0]) != index || index != static_cast<long long>(model.size())) {
      throw IngestError("score table indices must be contiguous and 1-based", lineno);
    }
    model.document_frequency.push_back(parse_int(f[2], lineno));
    std::vector<double> raw;
    for (std::size_t c = 0; c < model.classes.size(); ++c) raw.push_back(parse_double(f[3 + c], lineno));
    model.raw.push_back(std::move(raw));
    model.aggregated.push_back(parse_double(f.back(), lineno));
  }
  if (model.size() != vocab_size) throw IngestError("vocabulary_size does not match score table");
  std::pair<double, double> bounds{0.0, 0.0};
  model.normalized = minmax_normalize(model.aggregated, &bounds);
  model.score_min = bounds.first;
  model.score_max = bounds.second;
  return model;
}

WeightingModel load_model(const std::string& path) {
  auto in = open_in(path);
  try {
    return load_model(in);
  } catch (const IngestError& e) {
    throw IngestError(path + ": " + e.what());
  }
}

}  // namespace termweight
