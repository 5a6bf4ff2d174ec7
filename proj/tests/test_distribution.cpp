#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "support/fixtures.hpp"
#include "termweight/distribution.hpp"
#include "termweight/error.hpp"

using namespace termweight;
using termweight::testing::c4;

namespace {

// Straightforward reference: population moments per group.
DistributionStats reference_stats(const std::vector<ScatterPoint>& points) {
  auto moments = [](const std::vector<double>& ys) {
    double m = 0;
    for (double y : ys) m += y;
    m /= static_cast<double>(ys.size());
    double v = 0;
    for (double y : ys) v += (y - m) * (y - m);
    return std::pair{m, std::sqrt(v / static_cast<double>(ys.size()))};
  };
  std::vector<double> all;
  std::map<Count, std::vector<double>> groups;
  for (const auto& p : points) {
    all.push_back(p.y);
    groups[p.x].push_back(p.y);
  }
  DistributionStats s;
  std::tie(s.meany, s.stdy) = moments(all);
  for (const auto& [x, ys] : groups) s.sumstd += moments(ys).second;
  return s;
}

}  // namespace

TEST_CASE("worked example") {
  const std::vector<ScatterPoint> pts{{"a", 1, 0.0}, {"b", 1, 1.0}, {"c", 2, 0.5}};
  const auto s = distribution_stats(pts);
  CHECK(s.meany == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.stdy == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-12));
  CHECK(s.sumstd == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("constant scores have zero spread") {
  const std::vector<ScatterPoint> pts{{"a", 1, 0.1}, {"b", 3, 0.1}, {"c", 3, 0.1}, {"d", 7, 0.1}};
  const auto s = distribution_stats(pts);
  CHECK(s.stdy == 0.0);
  CHECK(s.sumstd == 0.0);
  CHECK(s.meany == doctest::Approx(0.1));
}

TEST_CASE("empty input is rejected") {
  CHECK_THROWS_AS(distribution_stats(std::vector<ScatterPoint>{}), ContractViolation);
}

TEST_CASE("C4 under dsidf") {
  VectorizerConfig cfg;
  cfg.metric = GlobalMetric::DeltaSmoothedIdf;
  const auto model = fit(c4(), cfg);
  const auto points = scatter(model);
  REQUIRE(points.size() == 4);
  for (const auto& p : points) CHECK(p.x == 2);
  const auto s = distribution_stats(points);
  CHECK(s.meany == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.stdy == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(s.sumstd == doctest::Approx(0.5).epsilon(1e-12));

  const auto stats = compute_counts(c4());
  const auto tf = scatter(model, stats, FrequencyAxis::TermFrequency);
  CHECK(tf[0].x == 3);  // good
  CHECK(tf[1].x == 2);  // food
}

TEST_CASE("baseline scores are flat") {
  std::mt19937_64 rng(30);
  const auto corpus = testing::random_corpus(rng);
  const auto s = distribution_stats(scatter(fit(corpus, VectorizerConfig{})));
  CHECK(s.meany == 1.0);
  CHECK(s.stdy == 0.0);
  CHECK(s.sumstd == 0.0);
}

TEST_CASE("singleton corpus") {
  std::istringstream in("pos\ta\n");
  const auto model = fit(ingest_corpus(in, CorpusFormat::Tsv), VectorizerConfig{});
  const auto pts = scatter(model);
  REQUIRE(pts.size() == 1);
  CHECK(pts[0].x == 1);
  CHECK(pts[0].y == 1.0);
}

TEST_CASE("statistics match the reference and ignore point order") {
  std::mt19937_64 rng(31);
  for (int round = 0; round < 10; ++round) {
    const auto corpus = testing::random_corpus(rng);
    for (auto metric : kAllGlobalMetrics) {
      VectorizerConfig cfg;
      cfg.metric = metric;
      auto pts = scatter(fit(corpus, cfg));
      const auto s = distribution_stats(pts);
      const auto r = reference_stats(pts);
      CHECK(s.meany == doctest::Approx(r.meany).epsilon(1e-12));
      CHECK(std::fabs(s.stdy - r.stdy) <= 1e-12);
      CHECK(std::fabs(s.sumstd - r.sumstd) <= 1e-9);
      CHECK(s.stdy >= 0.0);
      CHECK(s.sumstd >= 0.0);
      CHECK(s.meany >= 0.0);
      CHECK(s.meany <= 1.0);

      std::shuffle(pts.begin(), pts.end(), rng);
      const auto t = distribution_stats(pts);
      CHECK(t.meany == s.meany);
      CHECK(t.stdy == s.stdy);
      CHECK(t.sumstd == s.sumstd);
    }
  }
}

TEST_CASE("CSV writers") {
  const std::vector<ScatterPoint> pts{{"a,b", 1, 0.5}, {"c", 2, 1.0}};
  std::ostringstream out;
  write_scatter_csv(out, pts);
  CHECK(out.str() == "term,frequency,score\n\"a,b\",1,0.5\nc,2,1\n");

  std::ostringstream stats;
  const std::vector<MetricStats> rows{{GlobalMetric::DeltaSmoothedIdf, {0.5, 0.5, 0.5}}};
  write_stats_csv(stats, rows);
  CHECK(stats.str() == "metric,meany,stdy,sumstd\ndsidf,0.5,0.5,0.5\n");
}
