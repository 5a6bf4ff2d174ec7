#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "support/fixtures.hpp"
#include "termweight/io.hpp"

using namespace termweight;
using termweight::testing::slurp;
using termweight::testing::TempDir;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "termweight");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, '\t');) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("fit on C4") {
  TempDir dir;
  const auto train = dir.write("c4.tsv", testing::kC4Tsv);
  const auto model = dir.file("m.model");
  const auto r = run({"fit", train, "--global", "dsidf", "--local", "tp", "-o", model});
  REQUIRE(r.code == cli::kExitOk);
  CHECK(r.out.find("vocabulary=4") != std::string::npos);
  CHECK(r.out.find("pos=2") != std::string::npos);
  const auto m = load_model(model);
  CHECK(m.size() == 4);
  CHECK(m.classes.size() == 2);
  CHECK(m.config.metric == GlobalMetric::DeltaSmoothedIdf);
}

TEST_CASE("fit usage errors") {
  TempDir dir;
  const auto train = dir.write("c4.tsv", testing::kC4Tsv);
  const auto missing = run({"fit", dir.file("nope.tsv"), "-o", dir.file("m")});
  CHECK(missing.code == cli::kExitUsage);
  CHECK(missing.err.find("nope.tsv") != std::string::npos);

  const auto bogus = run({"fit", train, "--global", "bogus", "-o", dir.file("m")});
  CHECK(bogus.code == cli::kExitUsage);
  for (const char* id : {"bl", "dsidf", "orr", "cpd"}) CHECK(bogus.err.find(id) != std::string::npos);

  CHECK(run({"fit", train, "--local", "bm25", "-o", dir.file("m")}).code == cli::kExitUsage);
  CHECK(run({"fit", train, "--atf-k", "2", "-o", dir.file("m")}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
}

TEST_CASE("malformed corpus is a runtime failure with a line number") {
  TempDir dir;
  const auto bad = dir.write("bad.tsv", "pos\tgood\nno tab\n");
  const auto r = run({"fit", bad, "-o", dir.file("m")});
  CHECK(r.code == cli::kExitRuntime);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("transform") {
  TempDir dir;
  const auto train = dir.write("c4.tsv", testing::kC4Tsv);
  const auto model = dir.file("bl.model");
  REQUIRE(run({"fit", train, "--global", "bl", "--local", "tp", "--no-cosine", "-o", model}).code == 0);

  const auto vec = dir.file("c4.vec");
  REQUIRE(run({"transform", model, train, "-o", vec}).code == 0);
  const auto vectors = read_sparse_vectors(vec);
  REQUIRE(vectors.size() == 4);
  for (const auto& v : vectors) {
    CHECK_FALSE(v.entries.empty());
    for (const auto& e : v.entries) CHECK(e.weight == 1.0);
  }
  CHECK(lines(slurp(vec)).size() == 5);

  const auto empty = dir.write("empty.tsv", "");
  const auto empty_vec = dir.file("empty.vec");
  const auto e = run({"transform", model, empty, "-o", empty_vec});
  CHECK(e.code == 0);
  const auto empty_lines = lines(slurp(empty_vec));
  REQUIRE(empty_lines.size() == 1);
  CHECK(empty_lines[0].front() == '#');

  const auto oov = dir.write("oov.tsv", "pos\tpizza pasta\nneg\tsoup\n");
  const auto o = run({"transform", model, oov, "-o", dir.file("oov.vec")});
  CHECK(o.code == 0);
  CHECK(o.out.find("oov_tokens=3") != std::string::npos);
  CHECK(o.err.find("warning: 2") != std::string::npos);
  for (const auto& v : read_sparse_vectors(dir.file("oov.vec"))) CHECK(v.entries.empty());

  const auto mismatch = run({"transform", model, train, "--no-lowercase", "-o", dir.file("x.vec")});
  CHECK(mismatch.code == cli::kExitUsage);
  CHECK(run({"transform", dir.file("none.model"), train, "-o", dir.file("x.vec")}).code == cli::kExitUsage);
}

TEST_CASE("evaluate grid on C4") {
  TempDir dir;
  const auto train = dir.write("c4.tsv", testing::kC4Tsv);
  const auto report = dir.file("grid.tsv");
  REQUIRE(run({"evaluate", train, train, "--grid", "-o", report}).code == 0);
  auto rows = lines(slurp(report));
  REQUIRE(rows.size() == 17);
  CHECK(rows[0].find("seed=42") != std::string::npos);
  CHECK(fields(rows[1]) ==
        std::vector<std::string>{"metric", "tp", "tf", "atf", "logtf", "sumstd", "stdy", "meany"});
  const char* order[] = {"bl", "zd", "ig", "pmi", "ne", "chi", "kl", "wllr",
                         "orr", "dsidf", "dbidf", "rf", "cdm", "ngl", "cpd"};
  for (int i = 0; i < 15; ++i) {
    const auto f = fields(rows[2 + i]);
    REQUIRE(f.size() == 8);
    CHECK(f[0] == order[i]);
    for (std::size_t k = 1; k < 8; ++k) CHECK_FALSE(f[k].empty());
  }
  CHECK(fields(rows[2]) == std::vector<std::string>{"bl", "100.00", "100.00", "100.00", "100.00",
                                                    "0.000", "0.000", "1.000"});

  // Byte-identical on rerun, independent of thread count.
  const auto again = dir.file("grid2.tsv");
  REQUIRE(run({"evaluate", train, train, "--grid", "--threads", "1", "-o", again}).code == 0);
  CHECK(slurp(again) == slurp(report));
}

TEST_CASE("evaluate single cell and label errors") {
  TempDir dir;
  const auto train = dir.write("c4.tsv", testing::kC4Tsv);
  const auto r = run({"evaluate", train, train, "--global", "dsidf", "--seed", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("seed=7") != std::string::npos);
  CHECK(r.out.find("macro-F1 1.0000") != std::string::npos);

  const auto unseen = dir.write("unseen.tsv", "neutral\tgood food\n");
  const auto u = run({"evaluate", train, unseen});
  CHECK(u.code == cli::kExitRuntime);
  CHECK(u.err.find("neutral") != std::string::npos);

  const auto three = dir.write("three.tsv", "a\tx\nb\ty\nc\tz\n");
  CHECK(run({"evaluate", three, three, "--f1-mode", "posneg"}).code == cli::kExitRuntime);
  CHECK(run({"evaluate", three, three, "--f1-mode", "micro"}).code == cli::kExitUsage);
}

TEST_CASE("evaluate on a planted-keyword corpus") {
  std::mt19937_64 rng(606);
  const auto planted = testing::planted_corpus(rng);
  TempDir dir;
  const auto train = dir.write("train.tsv", testing::to_tsv(planted.train));
  const auto test = dir.write("test.tsv", testing::to_tsv(planted.test));
  const auto report = dir.file("report.tsv");
  REQUIRE(run({"evaluate", train, test, "--global", "rf", "--local", "atf", "-o", report}).code == 0);
  double macro = -1;
  for (const auto& l : lines(slurp(report))) {
    const auto f = fields(l);
    if (!f.empty() && f[0] == "macro") macro = std::stod(f[3]);
  }
  CHECK(macro >= 0.95);
}

TEST_CASE("analyze") {
  TempDir dir;
  const auto train = dir.write("c4.tsv", testing::kC4Tsv);
  const auto dsidf = dir.file("dsidf.model");
  const auto bl = dir.file("bl.model");
  REQUIRE(run({"fit", train, "--global", "dsidf", "-o", dsidf}).code == 0);
  REQUIRE(run({"fit", train, "--global", "bl", "-o", bl}).code == 0);

  const auto scatter = dir.file("scatter.csv");
  const auto stats = dir.file("stats.csv");
  const auto r = run({"analyze", dsidf, "--scatter", scatter, "--stats", stats});
  REQUIRE(r.code == 0);
  CHECK(slurp(stats) == "metric,meany,stdy,sumstd\ndsidf,0.5,0.5,0.5\n");
  CHECK(r.out == slurp(stats));
  CHECK(lines(slurp(scatter)).size() == 1 + 4);

  CHECK(run({"analyze", bl}).out == "metric,meany,stdy,sumstd\nbl,1,0,0\n");

  CHECK(run({"analyze", dsidf, "--x", "tf"}).code == cli::kExitUsage);
  const auto tf = run({"analyze", dsidf, "--x", "tf", "--corpus", train, "--scatter", scatter});
  CHECK(tf.code == 0);
  CHECK(slurp(scatter).find("good,3,1") != std::string::npos);

  const auto other = dir.write("other.tsv", "pos\tx\n");
  CHECK(run({"analyze", dsidf, "--corpus", other}).code == cli::kExitRuntime);
}

TEST_CASE("commands are idempotent") {
  TempDir dir;
  const auto train = dir.write("c4.tsv", testing::kC4Tsv);
  for (const char* metric : {"dsidf", "orr", "zd"}) {
    const auto a = dir.file("a.model"), b = dir.file("b.model");
    REQUIRE(run({"fit", train, "--global", metric, "--local", "atf", "-o", a}).code == 0);
    REQUIRE(run({"fit", train, "--global", metric, "--local", "atf", "-o", b}).code == 0);
    CHECK(slurp(a) == slurp(b));
    REQUIRE(run({"transform", a, train, "-o", dir.file("a.vec")}).code == 0);
    REQUIRE(run({"transform", b, train, "-o", dir.file("b.vec")}).code == 0);
    CHECK(slurp(dir.file("a.vec")) == slurp(dir.file("b.vec")));
    REQUIRE(run({"evaluate", train, train, "--global", metric, "-o", dir.file("a.tsv")}).code == 0);
    REQUIRE(run({"evaluate", train, train, "--global", metric, "-o", dir.file("b.tsv")}).code == 0);
    CHECK(slurp(dir.file("a.tsv")) == slurp(dir.file("b.tsv")));
  }
}
