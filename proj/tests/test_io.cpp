#include <doctest.h>

#include <cmath>
#include <sstream>

#include "support/fixtures.hpp"
#include "termweight/error.hpp"
#include "termweight/io.hpp"

using namespace termweight;
using termweight::testing::c4;

namespace {

std::vector<SparseVector> round_trip(const std::vector<SparseVector>& vectors) {
  std::stringstream ss;
  write_sparse_vectors(ss, vectors);
  return read_sparse_vectors(ss);
}

std::vector<SparseVector> parse(const std::string& text) {
  std::istringstream in(text);
  return read_sparse_vectors(in);
}

}  // namespace

TEST_CASE("sparse vector text layout") {
  std::vector<SparseVector> vectors(2);
  vectors[0].label = "pos";
  vectors[0].entries = {{1, 0.6}, {3, 0.8}};
  vectors[1].entries = {};
  std::ostringstream out;
  write_sparse_vectors(out, vectors);
  CHECK(out.str() == "# termweight sparse vectors v1 documents=2\npos 1:0.6 3:0.8\n_\n");
}

TEST_CASE("sparse vectors survive a round trip at six significant digits") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> weight(1e-4, 10.0);
  std::uniform_int_distribution<int> gap(1, 5);
  for (int round = 0; round < 50; ++round) {
    std::vector<SparseVector> vectors(1 + round % 7);
    for (auto& v : vectors) {
      if (round % 3) v.label = "c" + std::to_string(round % 4);
      TermIndex idx = 0;
      for (int k = 0; k < round % 11; ++k) {
        idx += static_cast<TermIndex>(gap(rng));
        v.entries.push_back({idx, weight(rng)});
      }
    }
    const auto back = round_trip(vectors);
    REQUIRE(back.size() == vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      CHECK(back[i].label == vectors[i].label);
      REQUIRE(back[i].entries.size() == vectors[i].entries.size());
      for (std::size_t k = 0; k < vectors[i].entries.size(); ++k) {
        CHECK(back[i].entries[k].index == vectors[i].entries[k].index);
        const double w = vectors[i].entries[k].weight;
        CHECK(std::fabs(back[i].entries[k].weight - w) <= 5e-6 * w);
        CHECK(back[i].entries[k].weight == std::stod(format_number(w, 6)));
      }
    }
    // Writing what was read reproduces the same bytes.
    std::ostringstream a, b;
    write_sparse_vectors(a, back);
    write_sparse_vectors(b, round_trip(back));
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("empty vector file") {
  CHECK(round_trip({}).empty());
  CHECK(parse("# termweight sparse vectors v1 documents=0\n").empty());
}

TEST_CASE("malformed sparse input names the line") {
  const char* bad[] = {
      "pos 1:0.5\npos 2-0.5\n",
      "pos 1:0.5\npos 3:1 2:1\n",
      "pos 1:0.5\npos 0:1\n",
      "pos 1:0.5\npos 1:nan\n",
      "pos 1:0.5\npos x:1\n",
      "pos 1:0.5\npos 2:1 2:1\n",
  };
  for (const char* text : bad) {
    CAPTURE(text);
    try {
      parse(text);
      FAIL("expected IngestError");
    } catch (const IngestError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("model save and load") {
  const auto corpus = c4();
  for (auto metric : kAllGlobalMetrics) {
    VectorizerConfig cfg;
    cfg.metric = metric;
    cfg.local = {LocalSchemeId::Augmented, 0.25};
    cfg.aggregation = Aggregation::Sum;
    cfg.cosine = false;
    const auto model = fit(corpus, cfg);
    std::stringstream ss;
    save_model(ss, model);
    const auto loaded = load_model(ss);
    CHECK(loaded.config.metric == metric);
    CHECK(loaded.config.local.id == LocalSchemeId::Augmented);
    CHECK(loaded.config.local.k == 0.25);
    CHECK(loaded.config.aggregation == Aggregation::Sum);
    CHECK_FALSE(loaded.config.cosine);
    CHECK(loaded.classes == model.classes);
    CHECK(loaded.vocabulary.terms() == model.vocabulary.terms());
    CHECK(loaded.document_frequency == model.document_frequency);
    CHECK(loaded.raw == model.raw);
    CHECK(loaded.aggregated == model.aggregated);
    CHECK(loaded.normalized == model.normalized);

    const std::vector<std::string> doc{"good", "food", "good", "pizza"};
    CHECK(transform(loaded, doc) == transform(model, doc));

    std::ostringstream again;
    save_model(again, loaded);
    CHECK(again.str() == ss.str());
  }
}

TEST_CASE("model files are checked") {
  std::istringstream not_model("term\tindex\n");
  CHECK_THROWS_AS(load_model(not_model), IngestError);

  std::ostringstream ss;
  save_model(ss, fit(c4(), VectorizerConfig{}));
  std::string text = ss.str();
  const auto row = text.find("food\t2");
  std::string gap = text;
  gap.replace(row, 6, "food\t5");
  std::istringstream gapped(gap);
  CHECK_THROWS_AS(load_model(gapped), IngestError);

  std::string unknown = text;
  unknown.replace(unknown.find("metric=bl"), 9, "metric=zz");
  std::istringstream bad_metric(unknown);
  CHECK_THROWS_AS(load_model(bad_metric), ConfigError);

  CHECK_THROWS_AS(load_model(std::string("/nonexistent/model.tsv")), IoError);
}

TEST_CASE("score table columns") {
  std::ostringstream out;
  write_score_table(out, fit(c4(), VectorizerConfig{}));
  std::istringstream in(out.str());
  std::string header;
  std::getline(in, header);
  CHECK(header == "term\tindex\tdf\traw_pos\traw_neg\taggregated");
  std::string first;
  std::getline(in, first);
  CHECK(first == "good\t1\t2\t1\t1\t1");
}
