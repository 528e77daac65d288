#include "cli.hpp"
#include "support.hpp"

#include <doctest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sixj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "sixj_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

std::vector<std::string> lines_of(const fs::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

}  // namespace

TEST_CASE("sixj") {
  CHECK(run({"sixj", "2", "2", "2", "2", "2", "2"}).out == "sqrt(1/36)\n");
  const Run f = run({"sixj", "2", "2", "2", "2", "2", "2", "--float"});
  CHECK(f.code == 0);
  CHECK(f.out.rfind("1.66666666666666666666", 0) == 0);
  CHECK(run({"sixj", "1", "1", "1", "1", "1", "1"}).out == "0\n");
}

TEST_CASE("qsixj") {
  const Run q = run({"qsixj", "2", "2", "2", "2", "2", "2", "--r", "5"});
  CHECK(q.code == 0);
  CHECK(q.out.rfind("-3.8196601125010515179541316563436188", 0) == 0);
  CHECK(run({"qsixj", "9", "9", "9", "9", "9", "9", "--r", "5"}).code == sixj::cli::kDomain);
  CHECK(run({"qsixj", "2", "2", "2", "2", "2", "2"}).code == sixj::cli::kUsage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == sixj::cli::kUsage);
  CHECK(run({"sixj", "1", "1", "1"}).code == sixj::cli::kUsage);
  CHECK(run({"sixj", "a", "1", "1", "1", "1", "1"}).code == sixj::cli::kUsage);
  CHECK(run({"frobnicate"}).code == sixj::cli::kUsage);
  CHECK(run({"asym", "pr", "2", "2", "2", "2", "2", "2", "--k", "5:2"}).code != 0);
}

TEST_CASE("help lists the exit codes") {
  const Run h = run({"--help"});
  CHECK(h.code == 0);
  for (const char* needle : {"Exit codes", "  0  success", "  3  domain error", "  7  degenerate"}) {
    CHECK(h.out.find(needle) != std::string::npos);
  }
}

TEST_CASE("geom") {
  const Run e = run({"geom", "1", "1", "1", "1", "1", "1"});
  CHECK(e.code == 0);
  CHECK(e.out.find("kind Euclidean") != std::string::npos);
  CHECK(e.out.find("cayley_det 4\n") != std::string::npos);
  CHECK(run({"geom", "1", "1", "1", "1", "1", "1.9"}).out.find("kind Minkowskian") != std::string::npos);
  CHECK(run({"geom", "1", "1", "1", "1", "1", "3"}).code == sixj::cli::kDomain);
  const std::string r2 = "1.4142135623730951";
  CHECK(run({"geom", r2, "1", "1", r2, "1", "1"}).code == sixj::cli::kDegenerate);
  const Run s = run({"geom", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "--spherical"});
  CHECK(s.code == 0);
  CHECK(s.out.find("volume 1.2337005501361697") != std::string::npos);
  CHECK(run({"geom", "9/10", "9/10", "9/10", "9/10", "9/10", "9/10", "--spherical"}).code == sixj::cli::kDomain);
}

TEST_CASE("asym writes a CSV") {
  const fs::path csv = scratch("pr.csv");
  fs::remove(csv);
  const Run a = run({"asym", "pr", "2", "2", "2", "2", "2", "2", "--k", "10:20:2", "--csv", csv.string()});
  CHECK(a.code == 0);
  const auto lines = lines_of(csv);
  REQUIRE(lines.size() == 7);
  CHECK(lines[0] == "k,exact,estimate,ratio");
  CHECK(lines[1].rfind("10,", 0) == 0);
  CHECK(lines[6].rfind("20,", 0) == 0);
  CHECK(run({"asym", "pr", "2", "2", "2", "2", "2", "2", "--k", "1:2", "--csv", "/nonexistent/dir/x.csv"}).code ==
        sixj::cli::kIo);
}

TEST_CASE("asym modes") {
  CHECK(run({"asym", "wigner", "1", "1", "1", "1", "1", "1"}).out.rfind("0.9488", 0) == 0);
  CHECK(run({"asym", "pr", "10", "10", "10", "10", "10", "18", "--k", "1:2"}).code == sixj::cli::kDomain);
  CHECK(run({"asym", "mink", "10", "10", "10", "10", "10", "18", "--k", "10:12"}).code == 0);
  CHECK(run({"asym", "woodward", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "--k", "3:5"}).code ==
        sixj::cli::kDomain);
  const Run w = run({"asym", "woodward", "1/2", "1/2", "1/2", "1/2", "1/2", "1/2", "--k", "4:16:4"});
  CHECK(w.code == 0);
  CHECK(w.out.find("excluded 2") != std::string::npos);
}

TEST_CASE("tv") {
  const std::string p = sixj::testing::data_path("s3_pentachoron.tri");
  const Run t = run({"tv", p, "--r", "3:4"});
  CHECK(t.code == 0);
  CHECK(t.out.find("3 5.000000000000000000") != std::string::npos);
  CHECK(t.out.find("4 2.500000000000000000") != std::string::npos);
  CHECK(run({"tv", "/nonexistent.tri", "--r", "3"}).code == sixj::cli::kIo);

  const fs::path bad = scratch("bad.tri");
  std::ofstream(bad) << "tets 2\n0 1 2 3\n";
  CHECK(run({"tv", bad.string(), "--r", "3"}).code == sixj::cli::kParse);
  const fs::path open = scratch("open.tri");
  std::ofstream(open) << "tets 1\n0 1 2 3\n";
  CHECK(run({"tv", open.string(), "--r", "3"}).code == sixj::cli::kValidation);
}

TEST_CASE("tv output does not depend on threads") {
  const std::string f = sixj::testing::data_path("s3_flipped.tri");
  const Run one = run({"tv", f, "--r", "3:5", "--threads", "1"});
  const Run many = run({"tv", f, "--r", "3:5", "--threads", "8"});
  CHECK(one.code == 0);
  CHECK(one.out == many.out);
}

TEST_CASE("json records") {
  const Run j = run({"--json", "sixj", "2", "2", "2", "2", "2", "2"});
  CHECK(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  for (const char* key : {"command", "parameters", "result", "precision_bits", "wall_time_s", "exit_code"}) {
    CHECK(doc.contains(key));
  }
  CHECK(doc["command"] == "sixj");
  CHECK(doc["precision_bits"].is_null());
  CHECK(doc["exit_code"] == 0);

  const Run q = run({"--json", "qsixj", "2", "2", "2", "2", "2", "2", "--r", "5", "--precision", "200"});
  CHECK(nlohmann::json::parse(q.out)["precision_bits"] == 200);

  const Run e = run({"--json", "qsixj", "9", "9", "9", "9", "9", "9", "--r", "5"});
  CHECK(e.code == sixj::cli::kDomain);
  CHECK(nlohmann::json::parse(e.out)["exit_code"] == sixj::cli::kDomain);
}
