#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "termweight/corpus.hpp"

namespace termweight::testing {

/// {pos:"good food good", pos:"good service", neg:"bad food", neg:"bad service bad"}
inline const char* kC4Tsv =
    "pos\tgood food good\n"
    "pos\tgood service\n"
    "neg\tbad food\n"
    "neg\tbad service bad\n";

inline Corpus c4() {
  std::istringstream in(kC4Tsv);
  return ingest_corpus(in, CorpusFormat::Tsv);
}

struct RandomCorpusSpec {
  std::size_t max_documents = 200;
  std::size_t max_terms = 100;
  std::size_t classes = 3;
  std::size_t max_length = 15;
};

/// Random labeled corpus. Every class gets at least one document. Term
/// choice is skewed towards a class-specific block of the vocabulary so
/// that exclusive terms, near-ubiquitous terms and zero counts all occur.
inline Corpus random_corpus(std::mt19937_64& rng, const RandomCorpusSpec& spec = {}) {
  std::uniform_int_distribution<std::size_t> n_docs(spec.classes, spec.max_documents);
  std::uniform_int_distribution<std::size_t> n_terms(2, spec.max_terms);
  const std::size_t docs = n_docs(rng);
  const std::size_t terms = n_terms(rng);
  std::uniform_int_distribution<std::size_t> length(1, spec.max_length);
  std::uniform_int_distribution<std::size_t> any_class(0, spec.classes - 1);
  std::uniform_int_distribution<std::size_t> any_term(0, terms - 1);
  std::bernoulli_distribution biased(0.6);
  // A few very common terms make df == N reachable on small corpora.
  std::bernoulli_distribution common(0.15);

  std::vector<LabeledDocument> out;
  for (std::size_t d = 0; d < docs; ++d) {
    const std::size_t cls = d < spec.classes ? d : any_class(rng);
    LabeledDocument doc;
    doc.label = "c" + std::to_string(cls);
    const std::size_t len = length(rng);
    for (std::size_t k = 0; k < len; ++k) {
      std::size_t t;
      if (common(rng)) {
        t = 0;
      } else if (biased(rng)) {
        const std::size_t block = std::max<std::size_t>(1, terms / spec.classes);
        t = std::min(terms - 1, cls * block + any_term(rng) % block);
      } else {
        t = any_term(rng);
      }
      doc.tokens.push_back("t" + std::to_string(t));
    }
    for (const auto& tok : doc.tokens) doc.text += tok + " ";
    out.push_back(std::move(doc));
  }
  return Corpus::build(std::move(out));
}

/// Three classes, each with 10 exclusive keywords ("k<c>_<j>"), plus 100
/// noise terms ("n<j>") shared by every class. A document holds 2 to 4 of its
/// class keywords and 3 to 8 noise tokens, shuffled. Keywords are dealt from a
/// per-class deck that is reshuffled when empty, so each keyword of a class
/// is planted about equally often.
struct PlantedCorpus {
  std::vector<std::string> classes{"alpha", "beta", "gamma"};
  std::vector<std::string> keywords;
  std::vector<LabeledDocument> train;
  std::vector<LabeledDocument> test;
};

inline PlantedCorpus planted_corpus(std::mt19937_64& rng, std::size_t train_docs = 600,
                                    std::size_t test_docs = 300) {
  PlantedCorpus out;
  for (std::size_t c = 0; c < out.classes.size(); ++c) {
    for (int j = 0; j < 10; ++j) out.keywords.push_back("k" + std::to_string(c) + "_" + std::to_string(j));
  }
  std::uniform_int_distribution<int> n_keys(2, 4), n_noise(3, 8), noise(0, 99);
  std::vector<std::vector<std::size_t>> decks(out.classes.size());
  auto deal = [&](std::size_t c) {
    auto& deck = decks[c];
    if (deck.empty()) {
      for (std::size_t j = 0; j < 10; ++j) deck.push_back(c * 10 + j);
      std::shuffle(deck.begin(), deck.end(), rng);
    }
    const auto k = deck.back();
    deck.pop_back();
    return k;
  };
  auto make = [&](std::size_t d) {
    const std::size_t c = d % out.classes.size();
    LabeledDocument doc;
    doc.label = out.classes[c];
    for (int k = n_keys(rng); k > 0; --k) doc.tokens.push_back(out.keywords[deal(c)]);
    for (int k = n_noise(rng); k > 0; --k) doc.tokens.push_back("n" + std::to_string(noise(rng)));
    std::shuffle(doc.tokens.begin(), doc.tokens.end(), rng);
    for (const auto& tok : doc.tokens) doc.text += (doc.text.empty() ? "" : " ") + tok;
    return doc;
  };
  for (std::size_t d = 0; d < train_docs; ++d) out.train.push_back(make(d));
  for (std::size_t d = 0; d < test_docs; ++d) out.test.push_back(make(d));
  return out;
}

inline std::string to_tsv(const std::vector<LabeledDocument>& docs) {
  std::string s;
  for (const auto& d : docs) s += d.label + "\t" + d.text + "\n";
  return s;
}

/// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("termweight-test-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  std::string file(const std::string& name) const { return (path_ / name).string(); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = file(name);
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace termweight::testing
