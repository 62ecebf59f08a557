#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "zz/generators.hpp"
#include "zz/serialize.hpp"
#include "zz/spectral.hpp"

namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = zz::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("zz_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  std::string gen(const std::string& name, std::vector<std::string> argv) const {
    argv.insert(argv.begin(), "gen");
    argv.push_back("-o");
    argv.push_back(path(name));
    EXPECT_EQ(run(argv).code, zz::cli::kOk);
    return path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesJsonByDefault) {
  auto r = run({"gen", "cycle", "5"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, zz::write_graph_json(zz::gen::cycle(5)));
}

TEST_F(CliTest, GenFormatsRoundTrip) {
  for (std::string f : {"json", "edgelist", "dot"}) {
    auto r = run({"gen", "cycle", "6", "--format", f});
    ASSERT_EQ(r.code, 0) << f;
    EXPECT_TRUE(zz::read_graph(r.out) == zz::gen::cycle(6)) << f;
  }
}

TEST_F(CliTest, GenCayleyCyclic) {
  auto r = run({"gen", "cayley_cyclic", "8", "1", "7", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::vector<std::int64_t> s{1, 7, 4};
  EXPECT_TRUE(zz::read_graph(r.out) == zz::gen::cayley_cyclic(8, s));
}

TEST_F(CliTest, GenRejectsUnknownKindAndFormat) {
  EXPECT_EQ(run({"gen", "wheel", "5"}).code, zz::cli::kUsageError);
  EXPECT_EQ(run({"gen", "cycle", "5", "--format", "gml"}).code, zz::cli::kUsageError);
  EXPECT_EQ(run({"gen", "cycle", "2"}).code, zz::cli::kUsageError);
}

TEST_F(CliTest, MissingSubcommandIsUsageError) {
  EXPECT_EQ(run({}).code, zz::cli::kUsageError);
  EXPECT_EQ(run({"frobnicate"}).code, zz::cli::kUsageError);
}

TEST_F(CliTest, HelpExitsZero) {
  auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("tower"), std::string::npos);
}

TEST_F(CliTest, SpectrumOfPipedCycle) {
  auto c4 = run({"gen", "cycle", "4"}).out;
  auto r = run({"spectrum", "-g", "-"}, c4);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("eigenvalues  2 0 0 -2\n"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("gap          2\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, SpectrumJsonMatchesLibrary) {
  auto g = gen("q3.json", {"hypercube", "3"});
  auto r = run({"spectrum", "-g", g, "--normalized", "--json"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, zz::write_spectrum_json(zz::normalized_laplacian_spectrum(zz::gen::hypercube(3))));
}

TEST_F(CliTest, SpectrumWithoutSecondModulusPrintsDash) {
  auto r = run({"spectrum", "-g", "-"}, run({"gen", "complete", "2"}).out);
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lambda2      -\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, PipedAndFileOutputsAreIdentical) {
  auto g = gen("c6.json", {"cycle", "6"});
  auto h = gen("p3.json", {"path", "3"});
  auto piped = run({"product", "-g", "-", "-H", h, "--constant", "1"}, slurp(g));
  ASSERT_EQ(piped.code, 0) << piped.err;
  ASSERT_EQ(run({"product", "-g", g, "-H", h, "--constant", "1", "-o", path("z.json")}).code, 0);
  EXPECT_EQ(piped.out, slurp(path("z.json")));

  auto s1 = run({"spectrum", "-g", "-"}, slurp(g));
  auto s2 = run({"spectrum", "-g", g});
  EXPECT_EQ(s1.out, s2.out);
}

TEST_F(CliTest, StdinReadTwiceIsRejected) {
  auto c4 = run({"gen", "cycle", "4"}).out;
  auto r = run({"product", "-g", "-", "-H", "-", "--constant", "0"}, c4);
  EXPECT_EQ(r.code, zz::cli::kUsageError);
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST_F(CliTest, MissingFileIsUsageError) {
  auto r = run({"spectrum", "-g", path("nope.json")});
  EXPECT_EQ(r.code, zz::cli::kUsageError);
  EXPECT_NE(r.err.find("nope.json"), std::string::npos);
}

TEST_F(CliTest, ProductNeedsOneLabelingSource) {
  auto g = gen("c4.json", {"cycle", "4"});
  auto h = gen("p3.json", {"path", "3"});
  EXPECT_EQ(run({"product", "-g", g, "-H", h}).code, zz::cli::kUsageError);
  EXPECT_EQ(run({"product", "-g", g, "-H", h, "--constant", "1", "-l", g}).code,
            zz::cli::kUsageError);
}

TEST_F(CliTest, ProductFromLabelingFileWithRelativeGraphPaths) {
  gen("c4.json", {"cycle", "4"});
  gen("p3.json", {"path", "3"});
  auto a = zz::HLabeling::constant(zz::gen::cycle(4), zz::gen::path(3), zz::VertexId(1));
  auto json = zz::write_labeling_json(a);
  auto l = write("labeling.json", json);
  auto r = run({"product", "-g", path("c4.json"), "-H", path("p3.json"), "-l", l});
  ASSERT_EQ(r.code, 0) << r.err;
  auto z = zz::read_product_json(r.out);
  EXPECT_EQ(z.product().vertex_count(), 8u);
  EXPECT_EQ(z.product().edge_count(), 16u);
}

TEST_F(CliTest, CheckCoverAcceptsCyclicCover) {
  auto c8 = gen("c8.json", {"cycle", "8"});
  auto c4 = gen("c4.json", {"cycle", "4"});
  auto m = write("m.txt", "0 0\n1 1\n2 2\n3 3\n4 0\n5 1\n6 2\n7 3\n");
  auto r = run({"check", "cover", "--map", m, "--from", c8, "--to", c4});
  EXPECT_EQ(r.code, 0) << r.err;
  auto c = run({"check", "comb-cover", "--map", m, "--from", c8, "--to", c4});
  EXPECT_EQ(c.code, 0);
  EXPECT_NE(c.out.find("index 2"), std::string::npos);
}

TEST_F(CliTest, CheckCoverReportsWitness) {
  auto c8 = gen("c8.json", {"cycle", "8"});
  auto c4 = gen("c4.json", {"cycle", "4"});
  auto m = write("m.txt", "0 0\n1 1\n2 2\n3 0\n4 0\n5 1\n6 2\n7 3\n");
  auto r = run({"check", "cover", "--map", m, "--from", c8, "--to", c4});
  EXPECT_EQ(r.code, zz::cli::kVerificationFailed);
  EXPECT_NE(r.out.find("witness: edge {2,3}"), std::string::npos) << r.out;
  auto c = run({"check", "comb-cover", "--map", m, "--from", c8, "--to", c4});
  EXPECT_EQ(c.code, zz::cli::kVerificationFailed);
  EXPECT_NE(c.out.find("witness: 2 3"), std::string::npos) << c.out;
}

TEST_F(CliTest, CheckCoverWitnessForNonBijectiveNeighbourhood) {
  // P3 folded onto K2 is a morphism but the centre sees one image twice.
  auto p3 = gen("p3.json", {"path", "3"});
  auto k2 = gen("k2.json", {"complete", "2"});
  auto m = write("m.txt", "0 0\n1 1\n2 0\n");
  auto r = run({"check", "cover", "--map", m, "--from", p3, "--to", k2});
  EXPECT_EQ(r.code, zz::cli::kVerificationFailed);
  EXPECT_NE(r.out.find("witness: vertex 1"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckPiIndexIsValencySquared) {
  auto g = gen("c5.json", {"cycle", "5"});
  auto h = gen("p3.json", {"path", "3"});
  ASSERT_EQ(run({"product", "-g", g, "-H", h, "--constant", "1", "-o", path("z.json")}).code, 0);
  auto r = run({"check", "pi", "-p", path("z.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("index           4\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckPiOnK2GivesIndexOne) {
  auto k2 = gen("k2.json", {"complete", "2"});
  ASSERT_EQ(run({"product", "-g", k2, "-H", k2, "--constant", "0", "-o", path("z.json")}).code, 0);
  auto r = run({"check", "pi", "-p", path("z.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("index           1\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, CheckPiRejectsNonConstantLabeling) {
  auto a = fixture::rank_labeling(zz::gen::complete(3), zz::gen::cycle(3));
  auto z = zz::write_product_json(zz::ZigZagGraph(a));
  auto p = write("z.json", z);
  auto r = run({"check", "pi", "-p", p});
  EXPECT_EQ(r.code, zz::cli::kUsageError);
}

TEST_F(CliTest, LiftWritesVerifiedArtifacts) {
  gen("c8.json", {"cycle", "8"});
  auto c4 = gen("c4.json", {"cycle", "4"});
  auto h = gen("p3.json", {"path", "3"});
  ASSERT_EQ(run({"product", "-g", c4, "-H", h, "--constant", "1", "-o", path("z.json")}).code, 0);
  auto m = write("m.txt", "0 0\n1 1\n2 2\n3 3\n4 0\n5 1\n6 2\n7 3\n");
  auto out = path("lift");
  auto r = run({"lift", "cover", "-p", m, "--from", path("c8.json"), "-z", path("z.json"), "-o", out});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("covering map     yes"), std::string::npos) << r.out;
  auto lifted = zz::read_product_json(slurp(fs::path(out) / "product.json"));
  EXPECT_EQ(lifted.product().vertex_count(), 16u);
  auto phat = zz::read_vertex_map(slurp(fs::path(out) / "phat.json"));
  EXPECT_TRUE(zz::is_covering_map(phat));
  auto beta = zz::read_labeling_json(slurp(fs::path(out) / "labeling.json"));
  EXPECT_TRUE(beta == lifted.labeling());

  auto c = run({"lift", "comb-cover", "-p", m, "--from", path("c8.json"), "-z", path("z.json")});
  EXPECT_EQ(c.code, 0) << c.err;
  EXPECT_NE(c.out.find("index                2"), std::string::npos) << c.out;
}

TEST_F(CliTest, LiftRejectsNonCover) {
  gen("c8.json", {"cycle", "8"});
  auto c4 = gen("c4.json", {"cycle", "4"});
  auto h = gen("p3.json", {"path", "3"});
  ASSERT_EQ(run({"product", "-g", c4, "-H", h, "--constant", "1", "-o", path("z.json")}).code, 0);
  auto m = write("m.txt", "0 0\n1 1\n2 2\n3 0\n4 0\n5 1\n6 2\n7 3\n");
  auto r = run({"lift", "cover", "-p", m, "--from", path("c8.json"), "-z", path("z.json")});
  EXPECT_EQ(r.code, zz::cli::kUsageError);
}

TEST_F(CliTest, TowerOnC4) {
  auto g = gen("c4.json", {"cycle", "4"});
  auto h = gen("p3.json", {"path", "3"});
  auto report = path("report.json");
  auto r = run({"tower", "-g", g, "-H", h, "--constant", "1", "--depth", "4", "--report", report});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("4      32   256  16   0       16   4"), std::string::npos) << r.out;
  auto json = slurp(report);
  EXPECT_NE(json.find("\"all_passed\": true"), std::string::npos);
  auto j = run({"tower", "-g", g, "-H", h, "--constant", "1", "--depth", "4", "--json"});
  EXPECT_EQ(j.out, json);
}

TEST_F(CliTest, TowerNeedsTwoLevels) {
  auto g = gen("c4.json", {"cycle", "4"});
  auto h = gen("p3.json", {"path", "3"});
  EXPECT_EQ(run({"tower", "-g", g, "-H", h, "--constant", "1", "--depth", "1"}).code,
            zz::cli::kUsageError);
}

TEST_F(CliTest, TowerBudgetTruncates) {
  auto g = gen("c4.json", {"cycle", "4"});
  auto h = gen("p3.json", {"path", "3"});
  auto r = run({"tower", "-g", g, "-H", h, "--constant", "1", "--depth", "6", "--budget", "20"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("truncated"), std::string::npos);
}

TEST_F(CliTest, FolnerOnLongCycle) {
  auto g = gen("c24.json", {"cycle", "24"});
  auto h = gen("p3.json", {"path", "3"});
  auto chain = write("chain.txt", "0 1 2 3\n0 1 2 3 4 5 6 7\n0 1 2 3 4 5 6 7 8 9 10 11\n");
  auto r = run({"folner", "-g", g, "-H", h, "--constant", "1", "--chain", chain});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("product ratios non-increasing: yes"), std::string::npos);
  EXPECT_NE(r.out.find("1/3"), std::string::npos) << r.out;
  auto j = run({"folner", "-g", g, "-H", h, "--constant", "1", "--chain", chain, "--json"});
  EXPECT_NE(j.out.find("\"1/3\""), std::string::npos) << j.out;
}

TEST_F(CliTest, FolnerRejectsUnnestedChain) {
  auto g = gen("c8.json", {"cycle", "8"});
  auto h = gen("p3.json", {"path", "3"});
  auto chain = write("chain.txt", "0 1\n2 3\n");
  EXPECT_EQ(run({"folner", "-g", g, "-H", h, "--constant", "1", "--chain", chain}).code,
            zz::cli::kUsageError);
}

TEST_F(CliTest, ExportConvertsFormats) {
  auto g = gen("q3.json", {"hypercube", "3"});
  auto dot = run({"export", "--dot", "-g", g});
  ASSERT_EQ(dot.code, 0);
  EXPECT_EQ(dot.out, zz::write_dot(zz::gen::hypercube(3)));
  auto back = run({"export", "--json", "-g", "-"}, dot.out);
  EXPECT_EQ(back.out, slurp(g));
  auto el = run({"export", "--edgelist", "-g", g});
  EXPECT_EQ(el.code, zz::cli::kUsageError);
  auto c6 = gen("c6.json", {"cycle", "6"});
  el = run({"export", "--edgelist", "-g", c6});
  EXPECT_EQ(el.out, zz::write_edge_list(zz::gen::cycle(6)));
  EXPECT_EQ(run({"export", "-g", g}).code, zz::cli::kUsageError);
  EXPECT_EQ(run({"export", "--dot", "--json", "-g", g}).code, zz::cli::kUsageError);
}

TEST_F(CliTest, ExportEdgeListRejectsIsolatedVertices) {
  auto g = gen("e.json", {"empty", "3"});
  auto r = run({"export", "--edgelist", "-g", g});
  EXPECT_EQ(r.code, zz::cli::kUsageError);
}

}  // namespace
