#include "support.hpp"

#include <random>
#include <sstream>

#include "dbruhat/cli.hpp"

using namespace test;
namespace cli = dbruhat::cli;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
  Json json() const { return Json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int s = cli::run(args, out, err);
  return {s, out.str(), err.str()};
}

}  // namespace

TEST_CASE("wts example") {
  const auto r = run({"wts", "--type", "A2", "--from", "e", "--to", "s1 s2 s1", "--via", "s1 s2 s1", "--weights", "1,1"});
  REQUIRE(r.status == cli::ok);
  const Json j = r.json();
  REQUIRE(j.is_array());
  std::map<int, int> mult;
  for (const auto& e : j) {
    CHECK(e["weight"] == Json::array({1, 1}));
    CHECK(e["short"].get<int>() + e["long"].get<int>() == e["length"].get<int>());
    mult[e["length"].get<int>()] += e["mult"].get<int>();
  }
  CHECK(mult == std::map<int, int>{{1, 1}, {3, 2}});
}

TEST_CASE("wts at weight zero is two sorted entries") {
  const auto r = run({"wts", "--type", "A2", "--from", "e", "--to", "s1 s2 s1", "--weights", "0,0"});
  REQUIRE(r.status == cli::ok);
  CHECK(r.out == R"([{"length":1,"long":0,"mult":1,"short":1,"weight":[0,0]},{"length":3,"long":0,"mult":1,"short":3,"weight":[0,0]}])"
                 "\n");
  const auto none = run({"wts", "--type", "A2", "--from", "s1", "--to", "e", "--via", "s1", "--weights", "0,0"});
  CHECK(none.out == "[]\n");
}

TEST_CASE("adlv example") {
  const auto r = run({"adlv", "--type", "A2", "--x", "s1 s2 s1;10,10", "--nu", "9,9"});
  REQUIRE(r.status == cli::ok);
  const Json j = r.json();
  CHECK(j["verdict"] == "nonempty_exact");
  CHECK(j["d"] == 5);
  CHECK(j["e"] == 3);
  CHECK(j["dimension"] == Json{{"kind", "exact"}, {"value", 5}});
  CHECK(j["components"] == Json{{"kind", "exact"}, {"value", 2}});
  CHECK(j["superparabolic"]["J"] == Json::array());
  CHECK(j["superparabolic"]["C_times_2"] == 12);
  CHECK(j["superparabolic"]["witness"] == "e");
}

TEST_CASE("status codes") {
  {
    const auto r = run({"rootsys", "--type", "Z9"});
    CHECK(r.status == cli::domain_error);
    CHECK(r.json()["error"]["kind"] == "domain");
    CHECK(r.json()["error"]["message"].get<std::string>().find("unknown Cartan label") != std::string::npos);
  }
  CHECK(run({"wts", "--type", "A2", "--to", "e", "--weights", "0,0"}).status == cli::parse_error);
  CHECK(run({"frobnicate"}).status == cli::parse_error);
  CHECK(run({}).status == cli::parse_error);
  CHECK(run({"adlv", "--type", "A2", "--x", "s1 s2 s1;10,10", "--nu", "-1,0"}).status == cli::domain_error);
  CHECK(run({"adlv", "--type", "A2", "--x", "s1 s9;10,10", "--nu", "1,1"}).status == cli::domain_error);
  CHECK(run({"adlv", "--type", "A2", "--x", "s1;10", "--nu", "1,1"}).status == cli::parse_error);
  CHECK(run({"types", "--type", "A2", "--x", "e;0,0", "--u", "e", "--n", "seven"}).status == cli::parse_error);
  CHECK(run({"types", "--type", "A2", "--x", "e;0,0", "--u", "e", "--n", "9"}).status == cli::domain_error);
  CHECK(run({"verify", "nonsense", "--type", "A1"}).status == cli::parse_error);
  CHECK(run({"verify", "all", "--type", "A5"}).status == cli::domain_error);
}

TEST_CASE("every subcommand answers") {
  const std::vector<std::vector<std::string>> calls{
      {"rootsys", "--type", "G2"},
      {"orders", "--type", "A3"},
      {"dbg-paths", "--type", "A2", "--from", "e", "--to", "s1 s2 s1", "--weight", "1,1"},
      {"qbg", "--type", "A2"},
      {"qbg", "--type", "A2", "--from", "s1 s2 s1", "--to", "e", "--window", "2rho"},
      {"types", "--type", "A2", "--x", "s1 s2 s1;1,1", "--u", "s1 s2 s1", "--order", "s1 s2 s1", "--n", "3"},
      {"intersect", "--type", "A2", "--u", "s1 s2 s1", "--v", "s1 s2 s1", "--x", "e;0,0", "--y", "s1 s2 s1;1,1"},
      {"verify", "all", "--type", "A1"},
  };
  for (const auto& c : calls) {
    CAPTURE(c.front());
    const auto r = run(c);
    CHECK(r.status == cli::ok);
    CHECK_NOTHROW((void)r.json());
  }
  CHECK(run({"orders", "--type", "A3"}).json()["count"] == 16);
  CHECK(run({"qbg", "--type", "A2", "--from", "s1 s2 s1", "--to", "e"}).json()["wt"] == Json::array({1, 1}));
  CHECK(run({"types", "--type", "A2", "--x", "s1 s2 s1;1,1", "--u", "s1 s2 s1"}).json()["types"].size() == 3);
  CHECK(run({"verify", "all", "--type", "A1"}).json()["ok"] == true);
}

TEST_CASE("pretty output is not JSON and may follow the subcommand") {
  const auto a = run({"--pretty", "intersect", "--type", "A2", "--u", "s1 s2 s1", "--v", "s1 s2 s1", "--x", "e;0,0", "--y",
                      "s1 s2 s1;1,1"});
  const auto b = run({"intersect", "--type", "A2", "--u", "s1 s2 s1", "--v", "s1 s2 s1", "--x", "e;0,0", "--y", "s1 s2 s1;1,1",
                      "--pretty"});
  CHECK(a.status == cli::ok);
  CHECK(a.out == b.out);
  CHECK(a.out.find("top_count: 2") != std::string::npos);
  CHECK_FALSE(Json::accept(a.out));
}

TEST_CASE("parse and serialize round-trip on fuzzed commands") {
  std::mt19937 rng(20261016);
  const std::vector<std::string> values{"A2", "e", "s1 s2 s1", "1,1", "0,0", "10,10", "2rho", "3", "s2;1,-1", "1,2"};
  const std::map<std::string, std::vector<std::pair<std::string, bool>>> shape{
      {"rootsys", {{"type", true}}},
      {"orders", {{"type", true}}},
      {"dbg-paths", {{"type", true}, {"from", true}, {"to", true}, {"weight", true}, {"order", false}, {"n", false}}},
      {"wts", {{"type", true}, {"from", true}, {"to", true}, {"via", false}, {"weights", true}}},
      {"qbg", {{"type", true}, {"from", false}, {"to", false}, {"window", false}}},
      {"types", {{"type", true}, {"x", true}, {"u", true}, {"order", false}, {"n", false}}},
      {"intersect", {{"type", true}, {"u", true}, {"v", true}, {"x", true}, {"y", true}}},
      {"adlv", {{"type", true}, {"x", true}, {"nu", true}}},
      {"verify", {{"type", true}, {"window", false}, {"threads", false}}},
  };
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  CHECK(shape.size() == cli::subcommands().size());
  for (int trial = 0; trial < 500; ++trial) {
    auto it = shape.begin();
    std::advance(it, static_cast<long>(pick(shape.size())));
    cli::Command c;
    c.subcommand = it->first;
    for (const auto& [name, required] : it->second)
      if (required || pick(2) == 0) c.options[name] = values[pick(values.size())];
    if (c.subcommand == "verify") c.positionals.push_back(pick(2) ? "all" : "orders");
    c.force = (c.subcommand == "orders" || c.subcommand == "verify") && pick(2) == 0;
    c.pretty = pick(3) == 0;
    CAPTURE(c.subcommand);
    const auto argv = cli::serialize(c);
    CHECK(cli::parse(argv) == c);
    CHECK(cli::serialize(cli::parse(argv)) == argv);
  }
}

TEST_CASE("output is byte-identical across runs and thread counts") {
  const std::vector<std::string> base{"verify", "qbg", "--type", "A2"};
  const auto first = run(base);
  REQUIRE(first.status == cli::ok);
  for (const char* t : {"1", "2", "4"}) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    CHECK(run(args).out == first.out);
  }
}

TEST_CASE("help goes to stdout with status zero") {
  const auto top = run({"--help"});
  CHECK(top.status == cli::ok);
  CHECK(top.out.find("Subcommands:") != std::string::npos);
  const auto sub = run({"wts", "--help"});
  CHECK(sub.status == cli::ok);
  CHECK(sub.out.find("--weights") != std::string::npos);
}
