#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "doctest.h"
#include "fixtures.hpp"
#include "pgcert/cli.hpp"
#include "pgcert/report.hpp"

namespace fs = std::filesystem;
using namespace pgcert;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pgcert");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string corpus_file(const std::string& id) {
  return std::string(PGCERT_CORPUS_DIR) + "/" + id + ".pcp";
}

std::string data_file(const std::string& name) {
  return std::string(PGCERT_TEST_DATA_DIR) + "/" + name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("pgcert_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

}  // namespace

TEST_CASE("certify heisenberg3 is routed, exit 0") {
  auto r = run({"certify", corpus_file("heisenberg3")});
  CHECK(r.code == cli::kOk);
  CHECK(r.out.find("NOT_COCLASS_2") != std::string::npos);
  auto j = run({"certify", "--json", corpus_file("heisenberg3")});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["route"] == "NOT_COCLASS_2");
  CHECK(doc["certificate"].is_null());
}

TEST_CASE("validate: consistent, inconsistent, malformed") {
  auto ok = run({"validate", corpus_file("sg_2187_253")});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("3^7") != std::string::npos);
  auto broken = run({"validate", data_file("broken.pcp")});
  CHECK(broken.code == cli::kInvalidInput);
  CHECK(broken.err.find("inconsistent") != std::string::npos);
  auto weight = run({"validate", data_file("weight_violation.pcp")});
  CHECK(weight.code == cli::kInvalidInput);
  CHECK(weight.err.find("line 4") != std::string::npos);
}

TEST_CASE("usage and IO errors exit 1") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"frobnicate"}).code == cli::kUsage);
  CHECK(run({"certify"}).code == cli::kUsage);
  CHECK(run({"certify", "/nonexistent/file.pcp"}).code == cli::kUsage);
  CHECK(run({"audit", "/nonexistent/dir"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("series and conditions") {
  auto s = run({"series", corpus_file("sg_2187_261")});
  REQUIRE(s.code == 0);
  CHECK(s.out.find("upper central  3^0 3^1 3^3 3^4 3^5 3^7") != std::string::npos);
  CHECK(s.out.find("coclass        2") != std::string::npos);
  CHECK(s.out.find("d(G)           2") != std::string::npos);
  auto c = run({"conditions", corpus_file("sg_2187_261")});
  REQUIRE(c.code == 0);
  CHECK(c.out.find("route    REMARK") != std::string::npos);
  CHECK(c.out.find("central automorphisms    9") != std::string::npos);
  auto h = run({"conditions", corpus_file("heis3_x_c3")});
  CHECK(h.out.find("SMALL_N") != std::string::npos);
  CHECK(h.out.find("[Bodna]") != std::string::npos);
}

TEST_CASE("certify --json matches the golden reports") {
  for (const char* id : {"heisenberg3", "sg_2187_253", "sg_2187_261"}) {
    INFO(id);
    auto r = run({"certify", "--json", corpus_file(id)});
    REQUIRE(r.code == 0);
    auto got = nlohmann::ordered_json::parse(strip_timings(r.out));
    auto want = nlohmann::ordered_json::parse(slurp(data_file(std::string("golden/") + id + ".json")));
    CHECK(got == want);
    // key order is part of the contract
    std::vector<std::string> gk, wk;
    for (auto it = got.begin(); it != got.end(); ++it)
      gk.push_back(it.key());
    for (auto it = want.begin(); it != want.end(); ++it)
      wk.push_back(it.key());
    CHECK(gk == wk);
  }
}

TEST_CASE("remark report fields") {
  auto r = run({"certify", "--json", corpus_file("sg_2187_296")});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["outcome"] == "CERTIFIED");
  CHECK(doc["certificate"]["order"] == 3);
  CHECK(doc["certificate"]["noninner"] == true);
  CHECK(doc["accepted"] == true);
  CHECK(doc["timings_ms"].contains("inner_search"));
}

TEST_CASE("certify --out writes the file; repeated runs agree modulo timings") {
  TempDir tmp;
  const auto a = tmp.path() / "a.json", b = tmp.path() / "b.json";
  auto r1 = run({"certify", "--json", "--out", a.string(), corpus_file("sg_2187_253")});
  auto r2 = run({"certify", "--json", "--serial", "--out", b.string(), corpus_file("sg_2187_253")});
  REQUIRE(r1.code == 0);
  REQUIRE(r2.code == 0);
  CHECK(r1.out.empty());
  CHECK(strip_timings(slurp(a)) == strip_timings(slurp(b)));
  CHECK(run({"certify", "--out", (tmp.path() / "missing" / "x").string(), corpus_file("heisenberg3")})
            .code == cli::kUsage);
}

TEST_CASE("audit: sorted output, manifest checks, exit codes") {
  TempDir tmp;
  const std::vector<std::string> ids{"sg_2187_261", "heisenberg3", "dihedral8", "heis3_x_c3"};
  // copy in a scrambled order; the report must not depend on it
  for (const auto& id : ids)
    fs::copy_file(corpus_file(id), tmp.path() / (id + ".pcp"));
  {
    std::ofstream m(tmp.path() / "manifest.tsv");
    m << "# id\troute\n";
    m << "heisenberg3\tNOT_COCLASS_2\n"
      << "dihedral8\tNOT_ODD_P\n"
      << "heis3_x_c3\tSMALL_N\n"
      << "sg_2187_261\tREMARK\n";
  }
  auto ok = run({"audit", tmp.path().string()});
  CHECK(ok.code == cli::kOk);
  std::vector<std::string> order;
  std::istringstream lines(ok.out);
  for (std::string line; std::getline(lines, line);)
    if (line.find('\t') != std::string::npos)
      order.push_back(line.substr(0, line.find('\t')));
  CHECK(order == std::vector<std::string>{"dihedral8", "heis3_x_c3", "heisenberg3", "sg_2187_261"});
  CHECK(ok.out.find("certified 1, routed 3") != std::string::npos);

  auto js = run({"audit", "--json", tmp.path().string()});
  REQUIRE(js.code == 0);
  auto doc = nlohmann::json::parse(js.out);
  CHECK(doc["summary"]["certified"] == 1);
  CHECK(doc["groups"].size() == 4);
  CHECK(doc["groups"][3]["report"]["certificate"]["chosen"] == "alpha_star");

  {
    std::ofstream m(tmp.path() / "manifest.tsv", std::ios::app);
    m << "sg_2187_999\tREMARK\n";
  }
  CHECK(run({"audit", tmp.path().string()}).code == cli::kManifestMismatch);
  {
    std::ofstream m(tmp.path() / "manifest.tsv");
    m << "heisenberg3\tSMALL_N\n";
  }
  auto mismatch = run({"audit", tmp.path().string()});
  CHECK(mismatch.code == cli::kManifestMismatch);
  CHECK(mismatch.out.find("MANIFEST MISMATCH") != std::string::npos);

  fs::copy_file(data_file("broken.pcp"), tmp.path() / "broken.pcp");
  fs::remove(tmp.path() / "manifest.tsv");
  auto bad = run({"audit", tmp.path().string()});
  CHECK(bad.code == cli::kInvalidInput);
  CHECK(bad.out.find("broken\tINCONSISTENT") != std::string::npos);
}
