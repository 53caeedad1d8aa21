#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "compat/convex_paths.hpp"
#include "compat/instance.hpp"
#include "compat/random_instances.hpp"
#include "support.hpp"

using namespace compat;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_file(const std::string& name) { return fs::temp_directory_path() / ("compat_test_" + name); }

void write_text(const fs::path& path, const std::string& text) { std::ofstream(path) << text; }

LabelSequence parse_witness(const std::string& line) {
  std::istringstream in(line.substr(line.find(':') + 1));
  LabelSequence seq;
  for (Label l; in >> l;) seq.push_back(l);
  return seq;
}

}  // namespace

TEST_CASE("instance JSON round-trip") {
  const auto [p, q] = generate_negative_instance(7);
  const Instance inst{p, q, false};
  CHECK(parse_instance(dump_instance(inst)) == inst);
  const Instance poly{compat::testing::points({{0, 0}, {3, 0}, {0, 3}}), compat::testing::points({{0, 0}, {0, 3}, {3, 0}}), true};
  CHECK(parse_instance(dump_instance(poly)) == poly);
}

TEST_CASE("malformed instances are rejected") {
  CHECK_THROWS_AS(parse_instance("{"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"P": []})"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"P": [{"label": 1, "x": 0}], "Q": [{"label": 1, "x": 0, "y": 0}]})"), InputError);
  CHECK_THROWS_AS(parse_instance(R"({"P": [{"label": 1, "x": 0, "y": 0}], "Q": [{"label": 2, "x": 0, "y": 0}]})"),
                  InputError);
  CHECK_THROWS_AS(
      parse_instance(R"({"P": [{"label": 1, "x": 0, "y": 0}], "Q": [{"label": 1, "x": 0, "y": 0}, {"label": 2, "x": 1, "y": 0}]})"),
      InputError);
}

TEST_CASE("cli: gen-negative then convex, polygon and oracle") {
  const fs::path file = temp_file("neg5.json");
  REQUIRE(run_cli({"gen-negative", "--n", "5", "--out", file.string()}).code == 0);
  const auto [p, q] = generate_negative_instance(5);
  CHECK(load_instance(file) == Instance{p, q, false});

  const Result convex = run_cli({"convex", file.string()});
  CHECK(convex.code == cli::kNone);
  CHECK(convex.out == "NONE\n");
  CHECK(run_cli({"oracle", file.string()}).code == cli::kNone);
  CHECK(run_cli({"gen-negative", "--n", "4"}).code == cli::kInputError);
  fs::remove(file);
}

TEST_CASE("cli: witnesses verify through the oracle") {
  Rng rng(4);
  const auto [p, q] = random_compatible_convex(7, rng);
  const fs::path file = temp_file("pos7.json");
  save_instance({p, q, false}, file);
  const Result r = run_cli({"convex", file.string()});
  REQUIRE(r.code == cli::kCompatible);
  REQUIRE(r.out.rfind("COMPATIBLE: ", 0) == 0);
  const LabelSequence w = parse_witness(r.out);
  CHECK(are_compatible(p, q, w));
  std::string text = r.out.substr(12);
  text.pop_back();
  const Result v = run_cli({"oracle", file.string(), "--verify", text});
  CHECK(v.code == cli::kCompatible);
  CHECK(v.out == "VALID\n");
  CHECK(run_cli({"oracle", file.string(), "--verify", "1 2 3"}).code == cli::kInputError);
  CHECK(run_cli({"oracle", file.string(), "--verify", "1 x"}).code == cli::kInputError);
  fs::remove(file);
}

TEST_CASE("cli: oracle and monotone agree") {
  Rng rng(6);
  for (int trial = 0; trial < 10; ++trial) {
    const auto p = random_general_position_set(6, rng, 100), q = random_general_position_set(6, rng, 100);
    const fs::path file = temp_file("mono.json");
    save_instance({p, q, false}, file);
    const int mono = run_cli({"monotone", file.string()}).code;
    const int oracle = run_cli({"oracle", file.string(), "--constraint", "monotone"}).code;
    CHECK(mono == oracle);
    fs::remove(file);
  }
}

TEST_CASE("cli: input errors exit with code 2") {
  const fs::path bad = temp_file("bad.json");
  write_text(bad, "{ not json");
  const Result r = run_cli({"convex", bad.string()});
  CHECK(r.code == cli::kInputError);
  CHECK(r.err.rfind("error: ", 0) == 0);
  CHECK(run_cli({"convex", temp_file("missing.json").string()}).code == cli::kInputError);
  CHECK(run_cli({"frobnicate"}).code == cli::kInputError);
  CHECK(run_cli({}).code == cli::kInputError);

  const fs::path degenerate = temp_file("degenerate.json");
  save_instance({compat::testing::points({{0, 0}, {1, 1}, {2, 2}}), compat::testing::points({{0, 0}, {1, 0}, {0, 1}}), false},
                degenerate);
  CHECK(run_cli({"monotone", degenerate.string()}).code == cli::kInputError);
  CHECK(run_cli({"convex", degenerate.string()}).code == cli::kInputError);
  fs::remove(bad);
  fs::remove(degenerate);
}

TEST_CASE("cli: polygon subcommand") {
  const fs::path file = temp_file("tri.json");
  const auto tri = compat::testing::points({{0, 0}, {3, 0}, {0, 3}});
  save_instance({tri, tri, true}, file);
  const Result r = run_cli({"polygon", file.string()});
  CHECK(r.code == cli::kCompatible);
  CHECK(run_cli({"oracle", file.string(), "--all"}).out.size() > r.out.size());
  fs::remove(file);
}

TEST_CASE("cli: oracle cap from the environment") {
  const auto [p, q] = generate_negative_instance(6);
  const fs::path file = temp_file("cap.json");
  save_instance({p, q, false}, file);
  setenv("COMPAT_ORACLE_CAP", "5", 1);
  CHECK(run_cli({"oracle", file.string()}).code == cli::kInputError);
  setenv("COMPAT_ORACLE_CAP", "many", 1);
  CHECK(run_cli({"oracle", file.string()}).code == cli::kInputError);
  unsetenv("COMPAT_ORACLE_CAP");
  CHECK(run_cli({"oracle", file.string()}).code == cli::kNone);
  fs::remove(file);
}

TEST_CASE("cli: render writes well-formed SVG") {
  const auto [p, q] = generate_negative_instance(6);
  const fs::path file = temp_file("render.json");
  const fs::path svg = temp_file("render.svg");
  save_instance({p, q, false}, file);
  REQUIRE(run_cli({"render", file.string(), "--out", svg.string(), "--witness", "1 2 3 4 5 6"}).code == 0);
  std::ifstream in(svg);
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("</svg>") != std::string::npos);
  CHECK(text.find("polyline") != std::string::npos);
  std::size_t opens = 0, closes = 0;
  for (std::size_t k = text.find("<g"); k != std::string::npos; k = text.find("<g", k + 1)) ++opens;
  for (std::size_t k = text.find("</g>"); k != std::string::npos; k = text.find("</g>", k + 1)) ++closes;
  CHECK(opens == closes);
  CHECK(run_cli({"render", file.string(), "--out", svg.string(), "--method", "convex"}).code == 0);
  fs::remove(file);
  fs::remove(svg);
}
