#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "fquandle/cli.hpp"

using namespace fquandle;

#ifndef FQUANDLE_TEST_DATA
#error "FQUANDLE_TEST_DATA must point at tests/data"
#endif

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int const status = cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

std::string data(std::string const& name) {
  return std::string(FQUANDLE_TEST_DATA) + "/" + name;
}

bool has_line(std::string const& text, std::string const& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) {
      return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("machine records") {
  cli::Record r("move");
  r.set("target", "x^(y)").set("by", "y").set("eps", "-1").set("note", "a b");
  CHECK(r.str() == "kind=move by=y eps=-1 note=\"a b\" target=x^(y)");
  CHECK(cli::quote_value("") == "\"\"");
  CHECK(cli::quote_value("say \"hi\"") == "\"say \\\"hi\\\"\"");
}

TEST_CASE("reduce") {
  auto const r = run({"reduce", "--alphabet", "x y", "x y^-1 x", "x x^-1"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out == "x y^-1 x\n1\n");

  auto const bad = run({"reduce", "--alphabet", "x y", "z"});
  CHECK(bad.status == cli::kInputError);
  CHECK(bad.err.find("UnknownGenerator") != std::string::npos);
}

TEST_CASE("qop") {
  auto const r = run({"--format", "machine", "qop", "--alphabet", "x y", "y",
                      "x^(y)"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out ==
        "kind=qop acted=y actor=x^(y) group_word=\"y^-1 x^-1 y x y\" "
        "op=right result=\"y^(x y)\"\n");
  auto const left = run({"qop", "--alphabet", "x y", "--op", "left",
                         "x^(y)", "y"});
  CHECK(left.out.starts_with("x^(y) <| y = x "));
}

TEST_CASE("basis --method paper on the worked example") {
  auto const r = run({"basis", "--method", "paper", data("xy_y.txt")});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("candidate:\n  b0 = x\n  b1 = y\n") != std::string::npos);
  CHECK(r.out.find("hall: PASS") != std::string::npos);
  CHECK(r.out.find("nielsen: PASS") != std::string::npos);
  CHECK(r.out.find("certified: yes") != std::string::npos);
}

TEST_CASE("basis --method greedy reports its move log") {
  auto const r = run({"--format", "machine", "basis", "--method", "greedy",
                      "--max-tail-len", "4", data("xy_y.txt")});
  CHECK(r.status == cli::kOk);
  CHECK(has_line(r.out,
                 "kind=move by=y eps=-1 result=x step=0 target=x^(y)"));
  CHECK(has_line(r.out, "kind=candidate element=x index=0"));
  CHECK(has_line(r.out, "kind=witness generator=x^(y) term=\"(b0 |> b1)\""));
}

TEST_CASE("basis with stability check") {
  auto const r = run({"--format", "machine", "basis", "--check-stability",
                      "--max-tail-len", "3", data("xy_xyinv.txt")});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.find("kind=stability") != std::string::npos);
  CHECK(r.out.find("stable=true") != std::string::npos);
}

TEST_CASE("verify-axioms") {
  auto const r = run({"verify-axioms", "--alphabet", "x y", "--samples", "200",
                      "--seed", "1"});
  CHECK(r.status == cli::kOk);
  CHECK(r.out.ends_with("PASS\n"));
}

TEST_CASE("check-independence") {
  auto const hall = run({"--format", "machine", "check-independence",
                         "--method", "hall", data("xy_y.txt")});
  CHECK(hall.status == cli::kVerificationFailed);
  CHECK(hall.out.find("checker=hall") != std::string::npos);
  CHECK(hall.out.find("left=y left_sign=+1") != std::string::npos);
  CHECK(hall.out.find("right=x^(y) right_sign=+1") != std::string::npos);
  CHECK(hall.out.find("passed=false") != std::string::npos);

  auto const nielsen = run({"check-independence", "--method", "nielsen",
                            data("xy_y.txt")});
  CHECK(nielsen.status == cli::kOk);

  auto const words = run({"check-independence", "--method", "nielsen",
                          "--words", data("dependent_words.txt")});
  CHECK(words.status == cli::kVerificationFailed);
  CHECK(words.out.find("dependent") != std::string::npos);

  auto const words_hall = run({"check-independence", "--method", "hall",
                               "--words", data("dependent_words.txt")});
  CHECK(words_hall.status == cli::kInputError);
}

TEST_CASE("closure and express") {
  auto const c = run({"--format", "machine", "closure", "--max-tail-len", "2",
                      data("xy_y.txt")});
  CHECK(c.status == cli::kOk);
  CHECK(has_line(c.out, "kind=closure bound=2 generators=2 size=18"));
  CHECK(has_line(c.out, "kind=element acted=0 actor=1 element=x "
                        "group_length=1 index=5 op=left"));

  auto const e = run({"express", "--max-tail-len", "2", "--element", "x",
                      data("xy_y.txt")});
  CHECK(e.status == cli::kOk);
  CHECK(e.out.find("x = (g0 <| g1)") != std::string::npos);

  auto const missing = run({"express", "--max-tail-len", "2", "--element",
                            "x^(y y y)", data("xy_y.txt")});
  CHECK(missing.status == cli::kVerificationFailed);
}

TEST_CASE("input errors exit with status 2") {
  CHECK(run({}).status == cli::kInputError);
  CHECK(run({"basis", data("does_not_exist.txt")}).status == cli::kInputError);
  CHECK(run({"basis", data("bad_even.txt")}).status == cli::kInputError);
  CHECK(run({"basis", "--method", "magic", data("xy_y.txt")}).status ==
        cli::kInputError);
  CHECK(run({"closure", "--max-tail-len", "1", data("three.txt")}).status ==
        cli::kInputError);
}

TEST_CASE("machine output is byte-identical across runs") {
  for (auto const& args : std::vector<std::vector<std::string>>{
           {"--format", "machine", "basis", data("three.txt")},
           {"--format", "machine", "basis", "--method", "greedy",
            data("three.txt")},
           {"--format", "machine", "verify-axioms", "--alphabet", "x y z",
            "--seed", "9", "--samples", "300"},
           {"--format", "machine", "closure", "--max-tail-len", "3",
            data("group_word_route.txt")}}) {
    auto const a = run(args);
    auto const b = run(args);
    CHECK(a.status == b.status);
    CHECK(a.out == b.out);
  }
}
