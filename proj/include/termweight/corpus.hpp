#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "termweight/tokenizer.hpp"

namespace termweight {

/// 1-based vocabulary index, as written to sparse vector files.
using TermIndex = std::uint32_t;
using ClassIndex = std::size_t;
using Count = std::int64_t;

struct LabeledDocument {
  std::string label;
  std::string text;
  std::vector<std::string> tokens;
};

enum class CorpusFormat { Auto, Tsv, JsonLines };

CorpusFormat parse_corpus_format(std::string_view name);

struct IngestDiagnostics {
  std::size_t records = 0;          // label/text records seen
  std::size_t dropped_empty = 0;    // records whose token list was empty
  std::size_t skipped_comments = 0;
};

/// Raw result of reading a corpus file. May be empty; no class structure.
struct DocumentSet {
  std::vector<LabeledDocument> documents;
  IngestDiagnostics diagnostics;
};

/// Terms with stable 1-based indices in first-occurrence order.
class Vocabulary {
 public:
  /// Returns the index of `term`, inserting it if absent.
  TermIndex add(const std::string& term);
  std::optional<TermIndex> find(std::string_view term) const;

  const std::string& term(TermIndex index) const { return terms_.at(index - 1); }
  const std::vector<std::string>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  std::vector<std::string> terms_;
  std::unordered_map<std::string, TermIndex> index_;
};

/// A nonempty labeled collection with its class set and vocabulary.
/// Immutable once built.
class Corpus {
 public:
  /// Throws IngestError if `documents` is empty.
  static Corpus build(std::vector<LabeledDocument> documents,
                      TokenizerConfig tokenizer = {},
                      IngestDiagnostics diagnostics = {});

  const std::vector<LabeledDocument>& documents() const noexcept { return documents_; }
  const std::vector<std::string>& classes() const noexcept { return classes_; }
  const Vocabulary& vocabulary() const noexcept { return vocabulary_; }
  const TokenizerConfig& tokenizer() const noexcept { return tokenizer_; }
  const IngestDiagnostics& diagnostics() const noexcept { return diagnostics_; }

  std::size_t size() const noexcept { return documents_.size(); }
  ClassIndex class_of(std::size_t doc) const { return doc_class_.at(doc); }
  std::optional<ClassIndex> find_class(std::string_view label) const;

 private:
  std::vector<LabeledDocument> documents_;
  std::vector<ClassIndex> doc_class_;
  std::vector<std::string> classes_;
  Vocabulary vocabulary_;
  TokenizerConfig tokenizer_;
  IngestDiagnostics diagnostics_;
};

/// Parses `label<TAB>text` lines. Lines starting with '#' and blank lines
/// are skipped. Throws IngestError naming the line on malformed records.
DocumentSet read_tsv(std::istream& in, const TokenizerConfig& tokenizer = {});

/// Parses one JSON object per line with string fields `label` and `text`.
DocumentSet read_jsonl(std::istream& in, const TokenizerConfig& tokenizer = {});

DocumentSet read_documents(const std::string& path, CorpusFormat format,
                           const TokenizerConfig& tokenizer = {});

/// read_documents followed by Corpus::build.
Corpus ingest_corpus(const std::string& path, CorpusFormat format = CorpusFormat::Auto,
                     const TokenizerConfig& tokenizer = {});
Corpus ingest_corpus(std::istream& in, CorpusFormat format,
                     const TokenizerConfig& tokenizer = {});

struct CorpusCounts {
  Count documents = 0;                  // N
  std::vector<Count> class_documents;   // N_c
  Count tokens = 0;
  std::vector<Count> class_tokens;

  std::size_t num_classes() const noexcept { return class_documents.size(); }
  Count outside(ClassIndex c) const { return documents - class_documents[c]; }
};

/// Document and token counts of one term, overall and per class. The
/// complementary counts are derived from these and the corpus totals.
struct TermCounts {
  Count df = 0;
  Count tf = 0;
  std::vector<Count> class_df;  // df_c
  std::vector<Count> class_tf;  // tf_c

  Count df_outside(ClassIndex c) const { return df - class_df[c]; }
  Count absent(const CorpusCounts& n) const { return n.documents - df; }
  Count absent_in(const CorpusCounts& n, ClassIndex c) const {
    return n.class_documents[c] - class_df[c];
  }
  Count absent_outside(const CorpusCounts& n, ClassIndex c) const {
    return n.outside(c) - df_outside(c);
  }

  bool operator==(const TermCounts&) const = default;
};

struct CorpusStatistics {
  CorpusCounts corpus;
  std::vector<TermCounts> terms;  // terms[index - 1]

  const TermCounts& term(TermIndex index) const { return terms.at(index - 1); }
};

/// Incremental counter. Partial counters over disjoint document shards can
/// be merged in any order with the same result.
class CountAccumulator {
 public:
  CountAccumulator(std::size_t num_classes, std::size_t vocabulary_size);

  void add(const std::vector<TermIndex>& tokens, ClassIndex cls);
  void merge(const CountAccumulator& other);
  CorpusStatistics finish() const;

 private:
  CorpusStatistics stats_;
  std::vector<std::uint32_t> seen_;  // scratch: last document stamp per term
  std::uint32_t stamp_ = 0;
};

/// Counts every term of the corpus. `threads` > 1 shards the documents.
CorpusStatistics compute_counts(const Corpus& corpus, unsigned threads = 1);

/// Unsmoothed maximum-likelihood estimates for one (term, class) pair.
/// p_class_given_absent is 0 when every document contains the term.
struct ProbabilityView {
  double p_class;                  // p(c)
  double p_term;                   // p(f)
  double p_class_given_term;       // p(c|f)
  double p_other_given_term;       // p(cbar|f)
  double p_class_given_absent;     // p(c|fbar)
  double p_joint;                  // p(c,f)
  double p_term_given_class;       // p(f|c)
  double p_term_given_other;       // p(f|cbar)
  double p_class_and_absent;       // p(c,fbar)
};

ProbabilityView probabilities(const CorpusCounts& corpus, const TermCounts& term,
                              ClassIndex cls);

}  // namespace termweight
