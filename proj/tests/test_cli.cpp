#include "catch_amalgamated.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qgen/render.hpp"

namespace {

std::string cli_path() {
  const char* p = std::getenv("QGEN_CLI");
  REQUIRE(p != nullptr);
  return p;
}

std::string golden_dir() {
  const char* p = std::getenv("QGEN_GOLDEN_DIR");
  REQUIRE(p != nullptr);
  return p;
}

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), got);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("golden displays are reproduced byte for byte") {
  CHECK(run("gen genocchi --n 8 --format text").out ==
        read_file(golden_dir() + "/genocchi_n8.txt"));
  CHECK(run("gen triangle --rows 8 --format text").out ==
        read_file(golden_dir() + "/triangle_rows8.txt"));
  CHECK(run("gen triangle --rows 6 --q --format text").out ==
        read_file(golden_dir() + "/qtriangle_rows6.txt"));
  CHECK(run("gen a-matrix --n 5 --format text").out ==
        read_file(golden_dir() + "/amatrix_n5.txt"));
}

TEST_CASE("gen subcommand") {
  CHECK(run("gen fib --n 5").out == "1 + 3*s + s^2\n");
  CHECK(run("gen fib --n 4 --q").out == "1 + (1 + q)*s\n");
  CHECK(run("gen fib --n 4 --q --inv-q").out == "1 + (q^-1 + 1)*s\n");
  CHECK(run("gen median --n 4").out == "1 1 2 8\n");
  CHECK(run("gen median --n 3 --q").out == "q^-1 1 q + q^2\n");
  CHECK(run("gen bernoulli --n 4").out == "1 -1/2 1/6 0 -1/30\n");
  auto r = run("gen genocchi --n 6 --q --format json");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["kind"] == "q_genocchi");
  CHECK(j["coefficient_ring"] == "Z[q,q^-1]");
  CHECK(j["values"][2]["index"] == 6);
  CHECK(j["values"][2]["value"] == "1 + q + q^2");
  CHECK(run("gen triangle --rows 4 --format csv").out ==
        "i,j,value\n1,1,1\n2,1,1\n3,1,1\n3,2,1\n4,1,2\n4,2,1\n");
  CHECK(run("gen triangle --rows 2 --format latex").out ==
        "\\begin{pmatrix}\n1 \\\\\n1 \\\\\n\\end{pmatrix}\n");
}

TEST_CASE("gen usage errors") {
  CHECK(run("gen fib --n 5 --inv-q").exit_code == 2);
  CHECK(run("gen bernoulli --n 5 --q").exit_code == 2);
  CHECK(run("gen nothing --n 5").exit_code == 2);
  CHECK(run("gen genocchi --n 0").exit_code == 2);
  CHECK(run("gen genocchi --n 1000").exit_code == 2);
  CHECK(run("gen genocchi --n 100 --q").exit_code == 2);  // q cap is lower
  CHECK(run("gen triangle --rows 5 --format yaml").exit_code == 2);
}

TEST_CASE("verify subcommand") {
  auto ok = run("verify --id I2_4 --max-n 30 --format text");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("I2_4") != std::string::npos);
  CHECK(ok.out.find("pass") != std::string::npos);

  CHECK(run("verify --id NOPE").exit_code == 2);
  CHECK(run("verify").exit_code == 2);
  CHECK(run("verify --all --id I2_4").exit_code == 2);
  CHECK(run("verify --all --max-n 5").exit_code == 2);
  CHECK(run("verify --id I2_4 --max-n 5000").exit_code == 2);

  auto all = run("verify --all --profile quick --format json");
  CHECK(all.exit_code == 0);
  auto j = nlohmann::json::parse(all.out);
  CHECK(j["suite"] == "quick");
  CHECK(j["totals"]["fail"] == 0);
  CHECK(j["totals"]["anomaly"] == 1);
  CHECK(j["cases"].size() >= 39);
  for (const auto& c : j["cases"]) {
    CHECK(c.contains("id"));
    CHECK(c.contains("params"));
    CHECK(c.contains("method"));
    CHECK(c.contains("status"));
    CHECK(c.contains("witness"));
  }
}

TEST_CASE("functional subcommand") {
  CHECK(run("functional --name L --poly \"s^2\"").out == "2\n");
  CHECK(run("functional --name V --poly \"x^1\"").out == "1/2\n");
  CHECK(run("functional --name Mq --poly-fib 3").out == "q/(1 + q)\n");
  CHECK(run("functional --name M --poly-fib 3").out == "1/2\n");
  CHECK(run("functional --name Lq --poly-fib 6").out ==
        "q^-4 + q^-3 + q^-2\n");
  CHECK(run("functional --name L --poly \"1 - s\" --table-size 4").out == "2\n");

  CHECK(run("functional --name X --poly \"s\"").exit_code == 2);
  CHECK(run("functional --name L").exit_code == 2);
  CHECK(run("functional --name L --poly \"s^\"").exit_code == 2);
  CHECK(run("functional --name L --poly \"s^3\" --table-size 2").exit_code == 2);
  CHECK(run("functional --name L --poly \"s^-1\"").exit_code == 1);
}

TEST_CASE("cli output parses back in the canonical grammar") {
  auto fib = run("gen fib --n 9 --q");
  std::string text = fib.out.substr(0, fib.out.size() - 1);
  CHECK(qgen::render(qgen::parse_spoly_qlaurent(text)) == text);

  auto csv = run("gen median --n 8 --q --format csv");
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);  // header
  int parsed = 0;
  while (std::getline(lines, line)) {
    auto comma = line.find(',');
    REQUIRE(comma != std::string::npos);
    std::string value = line.substr(comma + 1);
    CHECK(qgen::render(qgen::parse_qlaurent(value)) == value);
    ++parsed;
  }
  CHECK(parsed == 8);
}
