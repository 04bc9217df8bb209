#include <doctest.h>

#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmaderiv/cli.hpp"
#include "gmaderiv/document.hpp"
#include "helpers.hpp"

using namespace gmaderiv;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Writes a gallery fixture to a temp file and returns the path.
class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    char name[] = "/tmp/gmaderiv-test-XXXXXX";
    const int fd = mkstemp(name);
    REQUIRE(fd >= 0);
    path_ = name;
    std::ofstream f(path_);
    f << contents;
    close(fd);
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string gallery_text(const std::string& name, const GalleryParams& params = {}) {
  const MoritaContext ctx = make_gallery(name, params);
  std::map<std::string, Matrix> maps;
  if (ctx.dim_m() == ctx.dim_n()) {
    const GeneralizedMatrixAlgebra g = build_gma(ctx);
    maps.emplace("gamma-jord", gamma_jord(g));
    maps.emplace("theta1", theta1(g));
    maps.emplace("theta2", theta2(g));
  }
  return serialize_document(document_from_context(ctx, maps));
}

}  // namespace

TEST_CASE("check-context accepts every gallery fixture") {
  for (const auto& preset : gallery_presets()) {
    INFO(preset.label());
    const TempFile file(gallery_text(preset.name, preset.params));
    const RunResult r = run_cli({"check-context", file.path()});
    CHECK(r.code == cli::kExitOk);
  }
}

TEST_CASE("check-context reports violations with exit 1") {
  MoritaContext ctx = s_deformed_m2(Field::rationals(), Scalar::one(Field::rationals()));
  ctx.corrupt_phi(0, 0, 0, Scalar::of(Field::rationals(), 3));
  const TempFile file(serialize_document(document_from_context(ctx)));
  const RunResult r = run_cli({"check-context", file.path(), "--format", "machine"});
  CHECK(r.code == cli::kExitFalsified);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["valid"] == false);
  CHECK(j["issues"].size() > 0);
}

TEST_CASE("solve reports the expected dimension on the trivial fixture") {
  const TempFile file(gallery_text("trivial-q"));
  const RunResult r = run_cli({"solve", file.path(), "--kind", "jder", "--format", "machine"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["space_dim"] == 6);
  CHECK(j["gma_dim"] == 4);
  // Machine reports round-trip through the JSON parser.
  CHECK(nlohmann::ordered_json::parse(r.out).dump(2) + "\n" == r.out);
}

TEST_CASE("solve --basis emits the canonical basis") {
  const TempFile file(gallery_text("trivial-q"));
  const RunResult r =
      run_cli({"solve", file.path(), "--kind", "der", "--basis", "--format", "machine"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["basis"].size() == 4);
  CHECK(j["basis"][0].size() == 4);  // 4 columns per map on a 4-dim algebra
}

TEST_CASE("machine output is deterministic across runs") {
  for (const std::string kind : {"der", "jder", "ader"}) {
    const TempFile file(gallery_text("s-deformed", {{"field", "gf5"}, {"s", "2"}}));
    const RunResult a = run_cli({"solve", file.path(), "--kind", kind, "--format", "machine"});
    const RunResult b = run_cli({"solve", file.path(), "--kind", kind, "--format", "machine"});
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("decompose splits gamma into theta1 and theta2") {
  const TempFile file(gallery_text("trivial-q"));
  const RunResult r =
      run_cli({"decompose", file.path(), "--map", "gamma-jord", "--format", "machine"});
  REQUIRE(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "decomposed");
  // theta1 on the 4-dim instance: columns (0, m, -n, 0).
  CHECK(j["derivation_part"][1][1] == "1");
  CHECK(j["antiderivation_part"][2][1] == "1");
}

TEST_CASE("decompose reports not-applicable on nonzero pairings") {
  const TempFile file(gallery_text("s-deformed", {{"field", "q"}, {"s", "1"}}));
  const RunResult r =
      run_cli({"decompose", file.path(), "--map", "theta1", "--format", "machine"});
  CHECK(r.code == cli::kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["verdict"] == "not-applicable");
}

TEST_CASE("canonical verifies the Jordan form of gamma") {
  const TempFile file(gallery_text("trivial-q"));
  const RunResult ok =
      run_cli({"canonical", file.path(), "--map", "gamma-jord", "--prop", "3.2"});
  CHECK(ok.code == cli::kExitOk);
  const RunResult fail =
      run_cli({"canonical", file.path(), "--map", "gamma-jord", "--prop", "3.1", "--format",
               "machine"});
  CHECK(fail.code == cli::kExitFalsified);
  const auto j = nlohmann::json::parse(fail.out);
  CHECK(j["all_hold"] == false);
}

TEST_CASE("certify exit codes distinguish verdicts") {
  const TempFile s1(gallery_text("s-deformed", {{"field", "q"}, {"s", "1"}}));
  CHECK(run_cli({"certify", s1.path(), "--prop", "3.10"}).code == cli::kExitOk);

  const TempFile trivial(gallery_text("trivial-q"));
  const RunResult na = run_cli({"certify", trivial.path(), "--prop", "3.10", "--format", "machine"});
  CHECK(na.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(na.out)["verdict"] == "not-applicable");
  CHECK(run_cli({"certify", trivial.path(), "--prop", "3.11"}).code == cli::kExitOk);
}

TEST_CASE("malformed scalars yield exit 2 with a position") {
  const TempFile file("field rational\nalgebra A\n  dim 1\n  unit 1\n  c 0 0 0 1/0\nend\n");
  const RunResult r = run_cli({"solve", file.path(), "--kind", "der"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("line 5") != std::string::npos);
}

TEST_CASE("usage errors yield exit 2") {
  CHECK(run_cli({"solve", "/nonexistent-file", "--kind", "der"}).code == cli::kExitUsage);
  CHECK(run_cli({"gallery", "nonsense"}).code == cli::kExitUsage);
  CHECK(run_cli({"frobnicate"}).code == cli::kExitUsage);
  const TempFile file(gallery_text("trivial-q"));
  CHECK(run_cli({"canonical", file.path(), "--map", "missing", "--prop", "3.2"}).code ==
        cli::kExitUsage);
  CHECK(run_cli({"certify", file.path(), "--prop", "9.9"}).code == cli::kExitUsage);
}

TEST_CASE("a map that is not a Jordan derivation is a precondition error") {
  // The identity map fails the Jordan identity away from characteristic 2.
  std::string doc = gallery_text("trivial-q");
  doc += "\nmap ident\n  dim 4\n";
  for (int j = 0; j < 4; ++j) {
    doc += "  col " + std::to_string(j);
    for (int i = 0; i < 4; ++i) doc += (i == j) ? " 1" : " 0";
    doc += "\n";
  }
  doc += "end\n";
  const TempFile file(doc);
  const RunResult r = run_cli({"canonical", file.path(), "--map", "ident", "--prop", "3.2"});
  CHECK(r.code == cli::kExitUsage);
  CHECK(r.err.find("Jordan") != std::string::npos);
  CHECK(run_cli({"decompose", file.path(), "--map", "ident"}).code == cli::kExitUsage);
}

TEST_CASE("--out writes the document to a file") {
  char name[] = "/tmp/gmaderiv-out-XXXXXX";
  const int fd = mkstemp(name);
  REQUIRE(fd >= 0);
  close(fd);
  const RunResult r = run_cli({"gallery", "trivial-q", "--out", name});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(name);
  std::stringstream written;
  written << in.rdbuf();
  CHECK(build_context(parse_document(written.str())).dim_a() == 1);

  const RunResult gma = run_cli({"build-gma", name, "--out", name, "--format", "machine"});
  CHECK(gma.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(gma.out)["gma_dim"] == 4);
  std::ifstream in2(name);
  std::stringstream algebra_doc;
  algebra_doc << in2.rdbuf();
  CHECK(build_algebra(parse_document(algebra_doc.str()), "G").dim() == 4);
  std::remove(name);
}

TEST_CASE("gallery emits parseable documents and build-gma emits algebra documents") {
  const RunResult doc = run_cli({"gallery", "triangular", "--param", "n=3"});
  REQUIRE(doc.code == cli::kExitOk);
  const ContextDocument parsed = parse_document(doc.out);
  CHECK(parsed.algebras.at("A").dim == 3);  // T2 corner

  const TempFile file(doc.out);
  const RunResult gma = run_cli({"build-gma", file.path()});
  REQUIRE(gma.code == cli::kExitOk);
  const StructureAlgebra g = build_algebra(parse_document(gma.out), "G");
  CHECK(g.dim() == 6);

  const RunResult listing = run_cli({"gallery", "--list"});
  CHECK(listing.code == cli::kExitOk);
  CHECK(listing.out.find("skew-c2") != std::string::npos);
}
