#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "fixtures.hpp"
#include "lrkit/io.hpp"

#ifndef LRKIT_CLI_PATH
#error "LRKIT_CLI_PATH must point at the command-line binary"
#endif

using namespace lrkit;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

/// Runs the CLI with `args`, feeding `input` on stdin; stderr is discarded.
Run run(const std::string& args, const std::string& input = "") {
  static int counter = 0;
  const std::string in_path = "cli_test_input_" + std::to_string(counter++) + ".json";
  {
    std::ofstream f(in_path);
    f << input;
  }
  const std::string cmd = std::string(LRKIT_CLI_PATH) + " " + args + " < " + in_path + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::remove(in_path.c_str());
  return r;
}

std::string doc(const SkewTableau& t) { return to_json(to_document(t)).dump(); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("map") {
    const auto r = run("map --n 2", doc(fixtures::rows({{1, 1}, {2, 2}})));
    CHECK(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(to_tableau(document_from_json(j.at("p"))).empty());
    CHECK(to_tableau(document_from_json(j.at("q"))) == fixtures::rows({{2, 1}, {2, 1}}));
    CHECK(j.at("chain").dump() == "[[2,2],[1,1],[]]");

    const SkewTableau s = fixtures::rows({{1, 2}, {3}});
    const Json k = parse_json(run("map --n 2", doc(s)).out);
    CHECK(to_tableau(document_from_json(k.at("p"))) == s);
    CHECK(to_tableau(document_from_json(k.at("q"))).empty());

    CHECK(run("map --n 2", "{").code == 2);
    CHECK(run("map --n 1", doc(fixtures::column({1, 3}))).code == 2);
    CHECK(run("map --n 2 --render", doc(s)).out.find("P:") != std::string::npos);
  }

  TEST_CASE("invert") {
    const std::string pq = R"({"p":{"outer":[],"inner":[],"rows":[]},"q":{"outer":[1,1],"inner":[],"rows":[[1],[1]]}})";
    const auto r = run("invert --n 1", pq);
    CHECK(r.code == 0);
    CHECK(to_tableau(document_from_json(parse_json(r.out))) == fixtures::column({1, 2}));

    const std::string sym = R"({"p":{"outer":[2,1],"inner":[],"rows":[[1,2],[3]]},"q":{"outer":[2,1],"inner":[2,1],"rows":[[],[]]}})";
    CHECK(to_tableau(document_from_json(parse_json(run("invert --n 2", sym).out))) == fixtures::rows({{1, 2}, {3}}));

    const std::string bad_p = R"({"p":{"outer":[1,1],"inner":[],"rows":[[1],[2]]},"q":{"outer":[1,1],"inner":[1,1],"rows":[[],[]]}})";
    CHECK(run("invert --n 2", bad_p).code == 2);

    // A closed-form failure is a verification failure, the search recovers it.
    const std::string hard = R"({"p":{"outer":[1],"inner":[],"rows":[[5]]},"q":{"outer":[1,1,1],"inner":[1],"rows":[[],[1],[1]]}})";
    CHECK(run("invert --n 3", hard).code == 1);
    CHECK(run("invert --n 3 --exact", hard).code == 0);
  }

  TEST_CASE("map then invert reproduces the input") {
    const std::string input = doc(fixtures::rows({{1, 2, 2}, {2, 3}, {4}}));
    const auto mapped = run("map --n 2", input);
    REQUIRE(mapped.code == 0);
    const auto back = run("invert --n 2", mapped.out);
    REQUIRE(back.code == 0);
    const Json j = parse_json(back.out);
    CHECK(to_tableau(document_from_json(j)) == fixtures::rows({{1, 2, 2}, {2, 3}, {4}}));
  }

  TEST_CASE("verify") {
    auto r = run("verify --lambda 2,2 --n 1");
    CHECK(r.code == 0);
    CHECK(r.out == "lambda=(2,2) n=1 lhs=1 rhs=1 OK\n");
    CHECK(run("verify --lambda 1,1 --n 1").code == 0);
    CHECK(run("verify --lambda 1,1,1 --n 1").code == 2);
    CHECK(run("verify --lambda 4,3 --n 2").code == 2);
    CHECK(run("verify --lambda 4,3 --n 2 --force").code == 0);
    CHECK(run("verify --lambda 4,3 --n 2 --budget 7").code == 0);
    CHECK(run("verify --lambda 1,1,1 --n 3").code == 2);
    CHECK(run("verify --lambda 1,1,1 --n 3 --force").code == 1);
    CHECK(run("verify --lambda 1,1,1 --n 3 --force --exact").code == 0);
    const Json j = parse_json(run("verify --lambda 2,1 --n 2 --json").out);
    CHECK(j.at("lhs") == 20);
    CHECK(j.at("ok") == true);
    r = run("verify --all --n 2 --cells 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
  }

  TEST_CASE("verify writes certificates on failure") {
    const std::string path = "cli_test_certificates.json";
    std::remove(path.c_str());
    CHECK(run("verify --lambda 1,1,1 --n 3 --force --certificates " + path).code == 1);
    std::ifstream f(path);
    REQUIRE(f.good());
    const std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    const Json j = parse_json(text);
    CHECK(j.is_array());
    CHECK_FALSE(j.empty());
    CHECK(j.at(0).contains("witnesses"));
    std::remove(path.c_str());
  }

  TEST_CASE("enumerate") {
    const auto r = run("enumerate --kind rec --outer 1,1,1,1 --n 2");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"outer\":[1,1,1,1],\"inner\":[],\"rows\":[[1],[1],[1],[1]],\"n\":2,\"kind\":\"rec\"}\n");
    CHECK(run("enumerate --kind spt --outer 1,1 --n 2 --count").out == "5\n");
    CHECK(run("enumerate --kind lrs --outer 1 --n 1 --count").out == "0\n");
    CHECK(run("enumerate --kind ssyt --outer 2,1 --m 4 --count").out == "20\n");
    CHECK(run("enumerate --kind lrs --outer 4,3,2,2,1 --inner 3,1 --n 3 --count --force").code == 0);
    CHECK(run("enumerate --kind nope --outer 1 --n 1").code == 2);
    CHECK(run("enumerate --kind ssyt --outer 2 --m 9").code == 2);
    // Two runs give identical streams.
    CHECK(run("enumerate --kind ssyt --outer 2,1 --n 1").out == run("enumerate --kind ssyt --outer 2,1 --n 1").out);
  }

  TEST_CASE("symmetry") {
    const std::string input = to_json(to_document(fixtures::worked_lrs())).dump();
    const auto r = run("symmetry --n 3 --rect 5,4", input);
    REQUIRE(r.code == 0);
    const Json j = parse_json(r.out);
    CHECK(to_tableau(document_from_json(j.at("lozenge"))) == fixtures::worked_rec());
    CHECK(to_tableau(document_from_json(j.at("blacklozenge"))) == fixtures::worked_transpose_image());

    const std::string empty = R"({"outer":[1],"inner":[1],"rows":[[]]})";
    const Json e = parse_json(run("symmetry --n 1", empty).out);
    CHECK(to_tableau(document_from_json(e.at("lozenge"))).empty());
    CHECK(to_tableau(document_from_json(e.at("blacklozenge"))).empty());

    CHECK(run("symmetry --n 1", doc(fixtures::rows({{1}}))).code == 2);
  }

  TEST_CASE("render and usage errors") {
    CHECK(run("render", doc(fixtures::worked_lrs())).out == ". . . 1\n. 1 2\n1 2\n2 3\n4\n");
    CHECK(run("").code == 2);
    CHECK(run("map").code == 2);
    CHECK(run("frobnicate").code == 2);
  }
}
