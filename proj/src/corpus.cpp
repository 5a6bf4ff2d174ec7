#include "termweight/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <istream>

#include <json.hpp>

#include "termweight/error.hpp"

namespace termweight {

CorpusFormat parse_corpus_format(std::string_view name) {
  if (name == "auto") return CorpusFormat::Auto;
  if (name == "tsv") return CorpusFormat::Tsv;
  if (name == "jsonl") return CorpusFormat::JsonLines;
  throw ConfigError("unknown corpus format '" + std::string(name) +
                    "' (expected auto, tsv or jsonl)");
}

TermIndex Vocabulary::add(const std::string& term) {
  auto [it, inserted] =
      index_.try_emplace(term, static_cast<TermIndex>(terms_.size() + 1));
  if (inserted) terms_.push_back(term);
  return it->second;
}

std::optional<TermIndex> Vocabulary::find(std::string_view term) const {
  auto it = index_.find(std::string(term));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Corpus Corpus::build(std::vector<LabeledDocument> documents, TokenizerConfig tokenizer,
                     IngestDiagnostics diagnostics) {
  if (documents.empty()) throw IngestError("corpus has no documents");
  Corpus corpus;
  corpus.tokenizer_ = tokenizer;
  corpus.diagnostics_ = diagnostics;
  corpus.doc_class_.reserve(documents.size());
  for (const auto& doc : documents) {
    if (doc.tokens.empty()) throw ContractViolation("document without tokens");
    auto cls = corpus.find_class(doc.label);
    if (!cls) {
      corpus.classes_.push_back(doc.label);
      cls = corpus.classes_.size() - 1;
    }
    corpus.doc_class_.push_back(*cls);
    for (const auto& token : doc.tokens) corpus.vocabulary_.add(token);
  }
  corpus.documents_ = std::move(documents);
  return corpus;
}

std::optional<ClassIndex> Corpus::find_class(std::string_view label) const {
  auto it = std::find(classes_.begin(), classes_.end(), label);
  if (it == classes_.end()) return std::nullopt;
  return static_cast<ClassIndex>(it - classes_.begin());
}

namespace {

bool has_space(std::string_view s) {
  return std::any_of(s.begin(), s.end(), [](char ch) {
    return ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == '\v' || ch == '\f';
  });
}

void add_record(DocumentSet& set, std::string label, std::string text,
                std::size_t line, const DefaultTokenizer& tokenizer) {
  if (label.empty()) throw IngestError("empty label", line);
  if (has_space(label)) throw IngestError("label contains whitespace: '" + label + "'", line);
  if (!is_valid_utf8(text) || !is_valid_utf8(label)) throw IngestError("invalid UTF-8", line);
  ++set.diagnostics.records;
  auto tokens = tokenizer.tokenize(text);
  if (tokens.empty()) {
    ++set.diagnostics.dropped_empty;
    return;
  }
  set.documents.push_back({std::move(label), std::move(text), std::move(tokens)});
}

void chomp(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

}  // namespace

DocumentSet read_tsv(std::istream& in, const TokenizerConfig& config) {
  DocumentSet set;
  const DefaultTokenizer tokenizer(config);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      ++set.diagnostics.skipped_comments;
      continue;
    }
    const auto tab = line.find('\t');
    if (tab == std::string::npos) throw IngestError("missing <TAB> between label and text", lineno);
    add_record(set, line.substr(0, tab), line.substr(tab + 1), lineno, tokenizer);
  }
  return set;
}

DocumentSet read_jsonl(std::istream& in, const TokenizerConfig& config) {
  DocumentSet set;
  const DefaultTokenizer tokenizer(config);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    chomp(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.front() == '#') {
      ++set.diagnostics.skipped_comments;
      continue;
    }
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw IngestError(std::string("invalid JSON: ") + e.what(), lineno);
    }
    if (!record.is_object()) throw IngestError("record is not a JSON object", lineno);
    auto label = record.find("label");
    auto text = record.find("text");
    if (label == record.end() || !label->is_string()) {
      throw IngestError("missing string field 'label'", lineno);
    }
    if (text == record.end() || !text->is_string()) {
      throw IngestError("missing string field 'text'", lineno);
    }
    add_record(set, label->get<std::string>(), text->get<std::string>(), lineno, tokenizer);
  }
  return set;
}

DocumentSet read_documents(const std::string& path, CorpusFormat format,
                           const TokenizerConfig& tokenizer) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open corpus file: " + path);
  if (format == CorpusFormat::Auto) {
    const bool json = path.ends_with(".jsonl") || path.ends_with(".json");
    format = json ? CorpusFormat::JsonLines : CorpusFormat::Tsv;
  }
  try {
    return format == CorpusFormat::JsonLines ? read_jsonl(in, tokenizer)
                                             : read_tsv(in, tokenizer);
  } catch (const IngestError& e) {
    throw IngestError(path + ": " + e.what());
  }
}

Corpus ingest_corpus(const std::string& path, CorpusFormat format,
                     const TokenizerConfig& tokenizer) {
  auto set = read_documents(path, format, tokenizer);
  if (set.documents.empty()) throw IngestError(path + ": corpus has no usable documents");
  return Corpus::build(std::move(set.documents), tokenizer, set.diagnostics);
}

Corpus ingest_corpus(std::istream& in, CorpusFormat format, const TokenizerConfig& tokenizer) {
  auto set = format == CorpusFormat::JsonLines ? read_jsonl(in, tokenizer)
                                               : read_tsv(in, tokenizer);
  if (set.documents.empty()) throw IngestError("corpus has no usable documents");
  return Corpus::build(std::move(set.documents), tokenizer, set.diagnostics);
}

CountAccumulator::CountAccumulator(std::size_t num_classes, std::size_t vocabulary_size)
    : seen_(vocabulary_size, 0) {
  stats_.corpus.class_documents.assign(num_classes, 0);
  stats_.corpus.class_tokens.assign(num_classes, 0);
  stats_.terms.resize(vocabulary_size);
  for (auto& t : stats_.terms) {
    t.class_df.assign(num_classes, 0);
    t.class_tf.assign(num_classes, 0);
  }
}

void CountAccumulator::add(const std::vector<TermIndex>& tokens, ClassIndex cls) {
  ++stamp_;
  ++stats_.corpus.documents;
  ++stats_.corpus.class_documents.at(cls);
  stats_.corpus.tokens += static_cast<Count>(tokens.size());
  stats_.corpus.class_tokens[cls] += static_cast<Count>(tokens.size());
  for (TermIndex index : tokens) {
    auto& term = stats_.terms.at(index - 1);
    ++term.tf;
    ++term.class_tf[cls];
    if (seen_[index - 1] != stamp_) {
      seen_[index - 1] = stamp_;
      ++term.df;
      ++term.class_df[cls];
    }
  }
}

void CountAccumulator::merge(const CountAccumulator& other) {
  auto& a = stats_;
  const auto& b = other.stats_;
  if (a.terms.size() != b.terms.size() ||
      a.corpus.num_classes() != b.corpus.num_classes()) {
    throw ContractViolation("merging counters of different shape");
  }
  a.corpus.documents += b.corpus.documents;
  a.corpus.tokens += b.corpus.tokens;
  for (std::size_t c = 0; c < a.corpus.num_classes(); ++c) {
    a.corpus.class_documents[c] += b.corpus.class_documents[c];
    a.corpus.class_tokens[c] += b.corpus.class_tokens[c];
  }
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    a.terms[i].df += b.terms[i].df;
    a.terms[i].tf += b.terms[i].tf;
    for (std::size_t c = 0; c < a.corpus.num_classes(); ++c) {
      a.terms[i].class_df[c] += b.terms[i].class_df[c];
      a.terms[i].class_tf[c] += b.terms[i].class_tf[c];
    }
  }
}

CorpusStatistics CountAccumulator::finish() const { return stats_; }

CorpusStatistics compute_counts(const Corpus& corpus, unsigned threads) {
  const auto& vocab = corpus.vocabulary();
  const std::size_t n = corpus.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));

  auto count_range = [&](std::size_t begin, std::size_t end) {
    CountAccumulator acc(corpus.classes().size(), vocab.size());
    std::vector<TermIndex> ids;
    for (std::size_t d = begin; d < end; ++d) {
      ids.clear();
      for (const auto& token : corpus.documents()[d].tokens) ids.push_back(*vocab.find(token));
      acc.add(ids, corpus.class_of(d));
    }
    return acc;
  };

  if (threads == 1) return count_range(0, n).finish();

  std::vector<std::future<CountAccumulator>> shards;
  const std::size_t step = (n + threads - 1) / threads;
  for (std::size_t begin = 0; begin < n; begin += step) {
    shards.push_back(std::async(std::launch::async, count_range, begin, std::min(n, begin + step)));
  }
  CountAccumulator total = shards.front().get();
  for (std::size_t s = 1; s < shards.size(); ++s) total.merge(shards[s].get());
  return total.finish();
}

ProbabilityView probabilities(const CorpusCounts& n, const TermCounts& t, ClassIndex c) {
  auto ratio = [](Count num, Count den) {
    return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
  };
  ProbabilityView p{};
  p.p_class = ratio(n.class_documents[c], n.documents);
  p.p_term = ratio(t.df, n.documents);
  p.p_class_given_term = ratio(t.class_df[c], t.df);
  p.p_other_given_term = ratio(t.df_outside(c), t.df);
  p.p_class_given_absent = ratio(t.absent_in(n, c), t.absent(n));
  p.p_joint = ratio(t.class_df[c], n.documents);
  p.p_term_given_class = ratio(t.class_df[c], n.class_documents[c]);
  p.p_term_given_other = ratio(t.df_outside(c), n.outside(c));
  p.p_class_and_absent = ratio(t.absent_in(n, c), n.documents);
  return p;
}

}  // namespace termweight
