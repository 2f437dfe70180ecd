#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = infratop::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return std::string(INFRATOP_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content = {}) {
  const auto p = std::filesystem::temp_directory_path() / name;
  if (!content.empty()) std::ofstream(p) << content;
  return p;
}

}  // namespace

TEST_CASE("validate") {
  CHECK(run({"validate", data("ex41.json")}).code == 0);
  const auto bad = temp_file("infratop_bad.json", R"({"ground":["a","b","c"],"opens":[["a","b"],["b","c"]]})");
  const auto r = run({"validate", bad.string()});
  CHECK(r.code == 1);
  CHECK(r.err.find("{a,b} & {b,c} = {b}") != std::string::npos);
  const auto fixed = run({"validate", "--complete", bad.string()});
  CHECK(fixed.code == 0);
  CHECK(fixed.out.find("added {b}") != std::string::npos);
  CHECK(run({"validate", "/nonexistent.json"}).code == 1);
}

TEST_CASE("op, classify and families") {
  CHECK(run({"op", data("ex41.json"), "--set", "a", "--which", "closure"}).out == "{a,c,d}\n");
  CHECK(run({"op", data("ex41.json"), "--set", "c", "--which", "delta-closure"}).out == "{a,c,d}\n");
  CHECK(run({"op", data("ex41.json"), "--set", "c", "--which", "delta-closure", "--literal-delta-closure"}).out ==
        "{a,c}\n");
  CHECK(run({"op", data("ex41.json"), "--set", "z", "--which", "closure"}).code == 1);
  const auto c = run({"classify", data("ex41.json"), "--set", "c,d"});
  CHECK(c.code == 0);
  CHECK(c.out.find("e-star-open") != std::string::npos);
  CHECK(c.out.find("e-open\n") == std::string::npos);
  CHECK(run({"families", data("ex41.json"), "--class", "regular-open"}).out.find("{{}, {b}, {a,c}, {a,b,c,d}}") !=
        std::string::npos);
  CHECK(run({"families", data("ex41.json"), "--class", "gamma-open"}).code == 1);
}

TEST_CASE("enumerate") {
  CHECK(run({"enumerate", "--n", "3", "--count-only"}).out == "45\n");
  CHECK(run({"enumerate", "--n", "4", "--up-to-iso", "--count-only"}).out == "165\n");
  const auto lines = run({"enumerate", "--n", "2", "--jsonl"}).out;
  CHECK(lines == "{\"n\":2,\"opens\":[[],[\"a\",\"b\"]]}\n{\"n\":2,\"opens\":[[],[\"a\"],[\"a\",\"b\"]]}\n"
                 "{\"n\":2,\"opens\":[[],[\"b\"],[\"a\",\"b\"]]}\n{\"n\":2,\"opens\":[[],[\"a\"],[\"b\"],[\"a\",\"b\"]]}\n");
  std::uint64_t total = 0;
  for (int i = 0; i < 3; ++i) {
    total += std::stoull(run({"enumerate", "--n", "4", "--count-only", "--shard", std::to_string(i) + "/3"}).out);
  }
  CHECK(total == 2271);
  CHECK(run({"enumerate", "--n", "6"}).code == 1);
  CHECK(run({"enumerate", "--n", "3", "--shard", "3/3"}).code == 1);
}

TEST_CASE("check") {
  const auto one = run({"check", data("ex41.json"), "--theorem", "T2.19.ii"});
  CHECK(one.code == 0);
  CHECK(one.out.find("witness ({a}, {b})") != std::string::npos);
  CHECK(run({"check", data("ex41.json"), "--theorem", "T2.19.ii", "--strict"}).code == 0);
  CHECK(run({"check", "--enumerated", "3", "--theorem", "T2.18.v", "--strict"}).code == 2);
  CHECK(run({"check", "--enumerated", "3", "--theorem", "T2.20.iv", "--strict"}).code == 0);
  const auto unknown = run({"check", data("ex41.json"), "--theorem", "T9.99"});
  CHECK(unknown.code == 1);
  CHECK(unknown.err.find("T2.15") != std::string::npos);
  const auto jl = run({"check", data("s3.json"), "--theorem", "T-ICS-INT", "--jsonl"});
  const auto j = nlohmann::json::parse(jl.out);
  CHECK(j["witnesses"][0] == nlohmann::json::parse(R"([["b","c"],["a","c"]])"));
  CHECK(run({"check"}).code == 1);
}

TEST_CASE("output does not depend on the job count") {
  for (const char* cmd : {"check", "enumerate"}) {
    std::vector<std::string> base = std::string(cmd) == "check"
                                        ? std::vector<std::string>{"check", "--enumerated", "3", "--jsonl"}
                                        : std::vector<std::string>{"enumerate", "--n", "4", "--jsonl"};
    auto a = base;
    a.insert(a.end(), {"--jobs", "1"});
    auto b = base;
    b.insert(b.end(), {"--jobs", "3"});
    const auto ra = run(a);
    CHECK(ra.code == 0);
    CHECK(ra.out == run(b).out);
  }
  const auto ia = run({"implications", "--n", "3", "--dot", "--jobs", "1"});
  CHECK(ia.out == run({"implications", "--n", "3", "--dot", "--jobs", "3"}).out);
}

TEST_CASE("hunt and implications") {
  const auto h = run({"hunt", data("ex41.json"), "--from", "e-star-open", "--not-to", "beta-open"});
  CHECK(h.code == 0);
  CHECK(h.out.find("{c}") != std::string::npos);
  CHECK(run({"hunt", data("ex41.json"), "--from", "open", "--not-to", "open"}).code == 1);
  const auto dot = run({"implications", "--n", "3", "--dot"});
  CHECK(dot.out.rfind("digraph implications {", 0) == 0);
  const auto text = run({"implications", "--n", "2"});
  CHECK(text.out.find("open => semi-open: holds") != std::string::npos);
  const auto js = run({"implications", "--n", "2", "--json"});
  CHECK(nlohmann::json::parse(js.out).is_object());
}

TEST_CASE("run report") {
  const auto path = temp_file("infratop_report.json");
  const auto r = run({"--report", path.string(), "enumerate", "--n", "3", "--count-only"});
  CHECK(r.code == 0);
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["exit_code"] == 0);
  CHECK(j["output"] == "45\n");
  CHECK(j["input_digest"].get<std::string>().rfind("fnv1a64:", 0) == 0);
  CHECK(j["command"].size() == 6);
  CHECK(j.contains("timing_ms"));
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}
