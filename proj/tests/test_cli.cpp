#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "sgw/word.hpp"

namespace {

struct CliResult {
  int code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args, const std::string& env = "",
                  bool merge_stderr = false) {
  const std::string command = env + (env.empty() ? "" : " ") + SGW_CLI_PATH + " " + args +
                              (merge_stderr ? " 2>&1" : " 2>/dev/null");
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult r;
  std::array<char, 512> buffer;
  while (std::fgets(buffer.data(), buffer.size(), pipe) != nullptr) r.out += buffer.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string make_file(const std::string& name, const std::string& content) {
  const std::string path = "/tmp/sgw_cli_" + name;
  std::ofstream(path) << content;
  return path;
}

const std::string kD1Curve =
    R"({"base": "AbAb", "points": [{"case": "D1", "letters": ["a", "b"]}]})";
const std::string kTwoPointCurve =
    R"({"base": "AbAbCdCd", "points": [{"case": "D1", "letters": ["a", "b"]},
                                       {"case": "D1", "letters": ["c", "d"]}]})";

}  // namespace

TEST_CASE("word commands") {
  CHECK(run_cli("word canon AbbA").out == "AbbA\n");
  CHECK(run_cli("word canon AbbA").code == 0);
  CHECK(run_cli("word canon cAcA").out == "aBaB\n");
  CHECK(run_cli("word iso AbbA \"5- 2+ 2+ 5-\"").out == "true\n");
  CHECK(run_cli("word iso AbbA aBBa").out == "false\n");
  CHECK(run_cli("word pair aa ABccBA").out == "1\n");
  CHECK(run_cli("word subwords aBaB -k 1").out == "aa\nAA\n");
  CHECK(run_cli("word enum -n 1").out == "aa\nAA\n");
  CHECK(run_cli("word enum -n 1 --classes").out == "aa AA\n");
}

TEST_CASE("exit codes distinguish parse, validation and content results") {
  CHECK(run_cli("word canon \"E+ b+ b+ E-\"").code == 1);  // inconsistent signs
  CHECK(run_cli("word canon \"1* 1*\"").code == 2);        // malformed token
  CHECK(run_cli("word frobnicate aa").code == 2);          // unknown subcommand
  CHECK(run_cli("singular resolve /nonexistent.json").code == 2);
  CHECK(run_cli("--help").code == 0);

  const CliResult err = run_cli("word canon \"E+ b+ b+ E-\"", "", true);
  CHECK(err.out.find("inconsistent signs") != std::string::npos);
}

TEST_CASE("json output: flag, environment default, text override") {
  const CliResult flagged = run_cli("word canon --json cAcA");
  CHECK(nlohmann::json::parse(flagged.out) == nlohmann::json::parse(R"({"word": "aBaB"})"));

  const CliResult by_env = run_cli("word canon cAcA", "SGW_OUTPUT=json");
  CHECK(nlohmann::json::parse(by_env.out)["word"] == "aBaB");

  const CliResult overridden = run_cli("--text word canon cAcA", "SGW_OUTPUT=json");
  CHECK(overridden.out == "aBaB\n");
}

TEST_CASE("sci compute") {
  const CliResult j = run_cli("sci compute -n 1 aBaB --json");
  CHECK(nlohmann::json::parse(j.out) ==
        nlohmann::json::parse(R"({"order": 1, "values": {"aa": "2"}})"));
  CHECK(run_cli("sci compute -n 3 aa").out == "0\n");
  CHECK(run_cli("sci compute -n 0 aa").out == "(empty) = 1\n");
}

TEST_CASE("sci audit over a corpus file, stable under --parallel") {
  const std::string corpus = make_file("corpus.txt",
                                       "# sample words\n"
                                       "aa\n"
                                       "eight: aBaB\n"
                                       "abcabc\n");
  const CliResult serial = run_cli("sci audit -l 1 -k 2 --corpus " + corpus + " --json");
  CHECK(serial.code == 0);
  const auto rows = nlohmann::json::parse(serial.out);
  REQUIRE(rows.is_array());
  REQUIRE(rows.size() == 2);  // the one-letter word is skipped
  CHECK(rows[0]["label"] == "eight");
  CHECK(rows[0]["measured_lambda"] == "1");
  CHECK(rows[1]["label"] == "w3");
  CHECK(rows[1]["measured_lambda"] == "2");
  CHECK(rows[1]["proportional"] == true);

  const CliResult parallel = run_cli("--parallel 4 sci audit -l 1 -k 2 --corpus " + corpus + " --json");
  CHECK(parallel.out == serial.out);

  const std::string dup = make_file("dup.txt", "x: aa\nx: bb\n");
  CHECK(run_cli("sci audit -l 1 -k 1 --corpus " + dup).code == 1);
}

TEST_CASE("singular commands") {
  const std::string d1 = make_file("d1.json", kD1Curve);
  const std::string two = make_file("two.json", kTwoPointCurve);

  CHECK(run_cli("singular resolve " + d1 + " --sigma +").out == "AbAb\n");
  CHECK(run_cli("singular resolve " + d1 + " --sigma -").out == "\n");  // the empty word
  CHECK(run_cli("singular resolve " + d1).out == "AbAb\n");             // defaults to all +
  CHECK(run_cli("singular resolve " + d1 + " --sigma +-").code == 1);   // wrong length
  CHECK(run_cli("singular resolve " + d1 + " --sigma x").code == 2);

  const CliResult all = run_cli("singular resolve " + two + " --all --json");
  const auto rows = nlohmann::json::parse(all.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0]["sigma"] == "++");
  CHECK(rows[0]["word"] == "AbAbCdCd");
  CHECK(rows[1]["sigma"] == "+-");
  CHECK(rows[1]["word"] == "AbAb");
  CHECK(rows[2]["word"] == "AbAb");
  CHECK(rows[3]["sign"] == 1);
  CHECK(rows[3]["word"] == "");

  CHECK(run_cli("singular expand -n 1 " + d1).out == "aa = 2\n");

  const CliResult nonzero = run_cli("singular ftcheck -n 1 " + d1);
  CHECK(nonzero.code == 3);
  CHECK(nonzero.out == "aa = 2\n");
  CHECK(run_cli("singular ftcheck -n 1 " + two).code == 0);
  CHECK(run_cli("singular ftcheck -n 1 " + two).out == "0\n");

  const std::string bad = make_file("bad.json",
                                    R"({"base": "AbAb", "points": [{"case": "D1", "letters": ["a", "a"]}]})");
  CHECK(run_cli("singular resolve " + bad).code == 1);
}

TEST_CASE("surface commands") {
  CHECK(run_cli("surface genus AbAb").out == "1\n");
  CHECK(run_cli("surface genus aa").out == "0\n");
  CHECK(run_cli("surface rot aa --outer 2").out == "2\n");
  CHECK(run_cli("surface rot AbAb --outer 0").code == 1);  // not planar

  const CliResult faces = run_cli("surface faces aa --json");
  const auto j = nlohmann::json::parse(faces.out);
  CHECK(j["vertices"] == 1);
  CHECK(j["edges"] == 2);
  CHECK(j["faces"] == 3);
  CHECK(j["genus"] == 0);
  CHECK(j["face_edges"].size() == 3);
}

TEST_CASE("arnold check") {
  const CliResult ok = run_cli("arnold check AABB --rot 3 --jplus=-4 --jminus=-6 --st 2");
  CHECK(ok.code == 0);
  CHECK(ok.out == "residuals: 0 0\n");

  const CliResult off = run_cli("arnold check aa --rot 0 --jplus 1 --jminus=-1 --st 0");
  CHECK(off.code == 0);
  CHECK(off.out != "residuals: 0 0\n");
}

TEST_CASE("printed words re-parse to the same canonical word") {
  for (const char* text : {"AbbA", "cAcA", "aBcaBc"}) {
    const CliResult r = run_cli(std::string("word canon ") + text);
    REQUIRE(r.code == 0);
    std::string printed = r.out;
    if (!printed.empty() && printed.back() == '\n') printed.pop_back();
    CHECK(sgw::format_word(sgw::parse_word(printed)) == printed);
    CHECK(sgw::are_isomorphic(sgw::parse_word(printed), sgw::parse_word(text)));
  }
}
