#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "cli_util.hpp"

using cliutil::run_cli;
using cliutil::write_temp_file;

namespace {

const std::string k74 = write_temp_file("gbcode_74", cliutil::hamming74_matrix());
const std::string k102 = write_temp_file("gbcode_102", cliutil::matrix_10_2());

const std::string kBasisFixture =
    "X1 + X5*X6*X7\n"
    "X2 + X6*X7\n"
    "X3 + X5*X7\n"
    "X4 + X5*X6\n"
    "X5^2 + 1\n"
    "X6^2 + 1\n"
    "X7^2 + 1\n";

}  // namespace

TEST_CASE("gb prints the reduced basis, identically for both methods") {
  const auto closed = run_cli("gb --matrix " + k74);
  CHECK(closed.exit_code == 0);
  CHECK(closed.output == kBasisFixture);

  const auto completed = run_cli("gb --matrix " + k74 + " --method buchberger");
  CHECK(completed.exit_code == 0);
  CHECK(completed.output == closed.output);
}

TEST_CASE("gb under grlex needs the buchberger method") {
  CHECK(run_cli("gb --matrix " + k74 + " --order grlex").exit_code == 2);
  const auto res =
      run_cli("gb --matrix " + k74 + " --order grlex --method buchberger");
  CHECK(res.exit_code == 0);
  CHECK_FALSE(res.output.empty());
}

TEST_CASE("verify cross-checks the two constructions") {
  const auto lex = run_cli("verify --matrix " + k74);
  CHECK(lex.exit_code == 0);
  CHECK(lex.output ==
        "elements=7\nclosed_equals_buchberger=yes\ncriterion=pass\n");

  const auto grlex = run_cli("verify --matrix " + k74 + " --order grlex");
  CHECK(grlex.exit_code == 0);
  CHECK(grlex.output.find("criterion=pass") != std::string::npos);
}

TEST_CASE("encode") {
  const auto res = run_cli("encode --matrix " + k74 + " --message 1011");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "1011100\n");

  CHECK(run_cli("encode --matrix " + k74 + " --message 10110").exit_code == 2);
}

TEST_CASE("decode reports the codeword, error, and path") {
  SUBCASE("search path") {
    const auto res = run_cli("decode --matrix " + k74 + " --word 1001100");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "codeword=1011100\nerror=0010000\nmessage=1011\npath=search\n");
  }

  SUBCASE("simple path") {
    const auto res = run_cli("decode --matrix " + k74 + " --word 1101011");
    CHECK(res.exit_code == 0);
    CHECK(res.output ==
          "codeword=1101010\nerror=0000001\nmessage=1101\npath=simple\n");
  }

  SUBCASE("verbose adds the remainder and the accepted correction") {
    const auto res =
        run_cli("--verbose decode --matrix " + k74 + " --word 1001100");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("remainder=0000101\n") != std::string::npos);
    CHECK(res.output.find("v=0010000\n") != std::string::npos);
  }

  SUBCASE("a codeword decodes to itself") {
    const auto res = run_cli("decode --matrix " + k74 + " --word 1011100");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("error=0000000\n") != std::string::npos);
  }

  SUBCASE("failure exits 1") {
    const auto res = run_cli("decode --matrix " + k102 + " --word 0011000110");
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("decode_failure") != std::string::npos);
  }

  SUBCASE("the radius override narrows the search") {
    CHECK(run_cli("decode --matrix " + k102 + " --word 1011110011")
              .exit_code == 0);
    CHECK(run_cli("decode --matrix " + k102 + " --word 1011110011 --t 1")
              .exit_code == 1);
  }

  SUBCASE("wrong word length exits 2") {
    CHECK(run_cli("decode --matrix " + k74 + " --word 10011").exit_code == 2);
  }
}

TEST_CASE("distance") {
  const auto res = run_cli("distance --matrix " + k74);
  CHECK(res.exit_code == 0);
  CHECK(res.output == "d=3 t=1\n");

  const auto wide = run_cli("distance --matrix " + k102);
  CHECK(wide.output == "d=5 t=2\n");
}

TEST_CASE("distance enumeration cap exits 3") {
  std::string big;
  for (int i = 0; i < 25; ++i) {
    for (int j = 0; j < 25; ++j) big += (i == j ? '1' : '0');
    big += '\n';
  }
  const std::string path = write_temp_file("gbcode_big", big);
  CHECK(run_cli("distance --matrix " + path).exit_code == 3);
}

TEST_CASE("simulate is seeded and deterministic") {
  const std::string args =
      "simulate --matrix " + k74 + " --trials 500 --errors 1 --seed 7";
  const auto first = run_cli(args);
  CHECK(first.exit_code == 0);
  CHECK(first.output ==
        "trials=500 errors=1 successes=500 rate=1.000\n");

  CHECK(run_cli(args).output == first.output);
  CHECK(run_cli(args + " --workers 3").output == first.output);
}

TEST_CASE("simulate at the radius of a t=2 code stays perfect") {
  const auto res = run_cli("simulate --matrix " + k102 +
                           " --trials 400 --errors 2 --seed 11");
  CHECK(res.exit_code == 0);
  CHECK(res.output == "trials=400 errors=2 successes=400 rate=1.000\n");
}

TEST_CASE("simulate beyond the radius loses rounds but still reports") {
  const auto res = run_cli("simulate --matrix " + k74 +
                           " --trials 200 --errors 3 --seed 5");
  CHECK(res.exit_code == 0);
  CHECK(res.output.find("trials=200 errors=3 successes=") == 0);
  CHECK(res.output.find("successes=200") == std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  const std::string bad = write_temp_file("gbcode_bad", "10\n1x\n");
  CHECK(run_cli("gb --matrix " + bad).exit_code == 2);
  CHECK(run_cli("gb --matrix /nonexistent/matrix.txt").exit_code == 2);
  CHECK(run_cli("decode --matrix " + k74).exit_code == 2);  // missing --word
  CHECK(run_cli("bogus-subcommand").exit_code == 2);
}
