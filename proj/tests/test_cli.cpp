#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace partlat;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = {}) {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto dir = std::filesystem::temp_directory_path() / "partlat_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("demo prints every figure and exits 0") {
  for (int i = 4; i <= 18; ++i) {
    const auto id = "fig" + std::to_string(i);
    CAPTURE(id);
    const auto r = run({"demo", id});
    CHECK(r.code == 0);
    CHECK(r.out.find("elements:") != std::string::npos);
    CHECK(r.err.empty());
  }
  const auto dot = run({"demo", "fig5", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.starts_with("digraph"));
  CHECK(run({"demo", "fig99"}).code == 2);
}

TEST_CASE("malformed input exits 2 with a position") {
  const auto path = write_temp("bad.pl", "poset\nelements a b\nrel a<\n");
  const auto r = run({"validate", path});
  CHECK(r.code == 2);
  CHECK(r.err == path + ":3:7: expected element name\n");

  const auto s = run({"validate", "-"}, "plattice\nelements a b\njoin a b = q\n");
  CHECK(s.code == 2);
  CHECK(s.err.find("-:3:12: unknown element 'q'") != std::string::npos);

  CHECK(run({"validate", "/nonexistent/x.pl"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"verify", "--n", "9"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("validate") {
  CHECK(run({"validate", "-"}, testing::kFig4).code == 0);
  const auto r = run({"validate", "-"}, testing::kFig1);
  CHECK(r.code == 1);
  CHECK(r.out.find("U(a,b) = {c,d,1} has no least element") != std::string::npos);
  CHECK(run({"validate", "-"}, "plattice\nelements a b c\njoin a c = c\n").code == 1);
  CHECK(run({"validate", "-"}, "poset\nelements a b\nrel a<b\nrel b<a\n").code == 1);
}

TEST_CASE("extend notes the added bounds") {
  const auto path = write_temp("fig4.pl", testing::kFig4);
  const auto r = run({"extend", path, "--dot"});
  CHECK(r.code == 0);
  CHECK(r.out.starts_with("digraph"));
  CHECK(r.err == "added ⊥*, ⊤*\n");
  const auto plain = run({"extend", path});
  CHECK(plain.out.starts_with("added ⊥*, ⊤*\n"));
  CHECK(run({"extend", "-"}, testing::kFig3).out.starts_with("added nothing"));
}

TEST_CASE("quotient prints the table") {
  const auto path = write_temp("fig9.pl", testing::kFig9);
  const auto r = run({"quotient", path, "--classes", "a|b d|c"});
  CHECK(r.code == 0);
  CHECK(r.out.find("covers: [a]<[c] [b]<[c]") != std::string::npos);
  CHECK(r.out.find("[a]  | [a]  [c]  [c]") != std::string::npos);
  CHECK(run({"quotient", path, "--classes", "a b"}).code == 1);
  const auto bad = run({"quotient", path, "--classes", "a q"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--classes:1:3:") != std::string::npos);
}

TEST_CASE("other subcommands") {
  const auto onepoint = run({"onepoint", "-"}, testing::kFig4);
  CHECK(onepoint.code == 0);
  CHECK(onepoint.out.find("not a partial lattice: ") != std::string::npos);

  const auto cons = run({"congruences", "-"}, testing::kFig4);
  CHECK(cons.code == 0);
  CHECK(cons.out.find("a c|b\n") != std::string::npos);

  const auto order = run({"order", "-", "--dot"}, testing::kFig4);
  CHECK(order.out.find("n0 -> n2;") != std::string::npos);

  const auto a = write_temp("m2a.pl", testing::kFig3);
  const auto b = write_temp("m2b.pl", "poset\nelements p q r s\nrel p<q\nrel p<r\nrel q<s\nrel r<s\n");
  CHECK(run({"iso", a, b}).code == 0);
  const auto c = write_temp("chain.pl", "poset\nelements p q r s\nrel p<q\nrel q<r\nrel r<s\n");
  CHECK(run({"iso", a, c}).code == 1);

  const auto v = run({"verify", "--n", "3"});
  CHECK(v.code == 0);
  CHECK(v.out.find("FAIL") == std::string::npos);
}
