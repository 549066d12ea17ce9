#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "carter/corpus.hpp"
#include "carter/error.hpp"
#include "carter/families.hpp"
#include "carter/group_file.hpp"
#include "carter/report.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace carter;
namespace fs = std::filesystem;

namespace {

template <typename F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (Error const& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}

struct TempDir {
  fs::path path;
  explicit TempDir(std::string const& name)
      : path(fs::temp_directory_path() / ("carter_test_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(std::string const& file, std::string const& text) const {
    std::ofstream(path / file) << text;
  }
};

std::string slurp(fs::path const& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct Run {
  int status = 0;
  std::string output;
};

Run run_cli(std::string const& args) {
  std::string const command = std::string(CARTER_CLI) + " " + args + " 2>&1";
  Run run;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return {-1, {}};
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) run.output.append(buffer.data(), n);
  int const raw = pclose(pipe);
  run.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return run;
}

// Compares with tests/golden/<name>; CARTER_UPDATE_GOLDEN=1 rewrites it.
void expect_golden(std::string const& name, std::string const& actual) {
  fs::path const path = fs::path(CARTER_GOLDEN_DIR) / name;
  if (std::getenv("CARTER_UPDATE_GOLDEN")) {
    std::ofstream(path) << actual;
    return;
  }
  ASSERT_TRUE(fs::exists(path)) << path;
  EXPECT_EQ(actual, slurp(path)) << "golden " << name;
}

}  // namespace

TEST(GroupFileTest, ParsesGeneratorsOfAlt4) {
  auto f = parse_group_file("# id: A4\ndegree 4\n(1 2)(3 4)\n(1 2 3)\n");
  EXPECT_EQ(f.id, "A4");
  EXPECT_EQ(f.group.order(), 12u);
  EXPECT_EQ(f.generators.size(), 2u);
  EXPECT_EQ(oracle::closure(4, f.group.generators()).size(), 12u);
}

TEST(GroupFileTest, EmptyGeneratorListIsTrivial) {
  auto f = parse_group_file("degree 1\n", "one");
  EXPECT_EQ(f.group.order(), 1u);
  EXPECT_EQ(f.id, "one");
}

TEST(GroupFileTest, KleinFourCayleyTable) {
  auto f = parse_group_file("cayley 4\n1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n");
  EXPECT_EQ(f.group.order(), 4u);
  EXPECT_EQ(f.group.degree(), 4u);
  for (auto const& x : f.group.elements().elements()) EXPECT_EQ(x.pow(2), Permutation(4));
  // Regular: no non-identity element fixes a point.
  for (auto const& x : f.group.elements().elements()) {
    if (!x.is_identity()) EXPECT_EQ(x.support_size(), 4u);
  }
}

TEST(GroupFileTest, Errors) {
  try {
    parse_group_file("degree 3\n(1 2\n");
    FAIL() << "expected ParseError";
  } catch (ParseError const& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GE(e.column(), 1u);
  }
  EXPECT_EQ(error_of([] { parse_group_file("degree 3\n(1 4)\n"); }), ErrorCode::DegreeMismatch);
  EXPECT_EQ(error_of([] { parse_group_file("cayley 2\n1 2\n2 2\n"); }), ErrorCode::NotALatinSquare);
  EXPECT_EQ(error_of([] { parse_group_file("groups 3\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(error_of([] { parse_group_file(""); }), ErrorCode::ParseError);
}

TEST(GroupFileTest, RoundTrips) {
  for (auto const& g : {symmetric_group(5), dihedral_group(7), dicyclic_group(3)}) {
    auto again = parse_group_file(serialize_group(g, "x")).group;
    EXPECT_EQ(again, g);
    auto table = cayley_table(g);
    auto from_table = parse_group_file(serialize_cayley(table, "y"));
    EXPECT_EQ(from_table.cayley, table);
    EXPECT_EQ(from_table.group.order(), g.order());
  }
}

TEST(ReportTest, SerializationIsDeterministic) {
  Limits limits;
  auto a = run_command(Command::theorem, symmetric_group(4), "S4", limits).record;
  auto b = run_command(Command::theorem, symmetric_group(4), "S4", limits).record;
  EXPECT_EQ(a, b);
  auto j = nlohmann::ordered_json::parse(a);
  std::vector<std::string> keys;
  for (auto const& [k, v] : j.items()) keys.push_back(k);
  ASSERT_GE(keys.size(), 4u);
  EXPECT_EQ(keys[0], "command");
  EXPECT_EQ(keys[1], "group");
  EXPECT_EQ(keys[2], "order");
  EXPECT_EQ(keys[3], "limits");
  EXPECT_EQ(j["verdict"], "consistent");
}

TEST(ReportTest, GoldenRecords) {
  Limits limits;
  auto s4 = run_command(Command::carter, symmetric_group(4), "S4", limits).record;
  expect_golden("carter_s4.txt", render(s4, Format::text));
  expect_golden("carter_s4.json", render(s4, Format::structured));
  auto s5 = run_command(Command::theorem, symmetric_group(5), "S5", limits).record;
  expect_golden("theorem_s5.txt", render(s5, Format::text));
  auto l5 = run_command(Command::lemma5, symmetric_group(4), "S4", limits).record;
  expect_golden("lemma5_s4.txt", render(l5, Format::text));
  ExtensionDescriptor x;
  x.a_equals_g = false;
  auto e6 = catalog_record("E6", {1, 2, 1}, x, catalog_lookup(Family::E6, {1, 2, 1}, x));
  expect_golden("catalog_e6.txt", render(e6, Format::text));
}

TEST(ReportTest, FormatAndCommandNames) {
  EXPECT_EQ(parse_format("text"), Format::text);
  EXPECT_EQ(parse_format("structured"), Format::structured);
  EXPECT_THROW(parse_format("xml"), Error);
  for (auto c : {Command::carter, Command::star, Command::theorem, Command::lemma1,
                 Command::lemma3, Command::lemma5}) {
    EXPECT_EQ(parse_command(to_string(c)), c);
  }
}

TEST(CorpusTest, NamedGroupsAreConsistent) {
  TempDir dir("named");
  dir.write("s3.grp", serialize_group(symmetric_group(3), "S3"));
  dir.write("s4.grp", serialize_group(symmetric_group(4), "S4"));
  dir.write("a4.grp", serialize_group(alternating_group(4), "A4"));
  dir.write("a5.grp", serialize_group(alternating_group(5), "A5"));
  auto summary = run_corpus(dir.path, Command::theorem, {}, 2);
  ASSERT_EQ(summary.entries.size(), 4u);
  EXPECT_EQ(summary.ok, 4u);
  std::vector<std::string> ids;
  for (auto const& e : summary.entries) {
    ids.push_back(e.id);
    EXPECT_EQ(nlohmann::json::parse(e.record)["verdict"], "consistent");
  }
  EXPECT_EQ(ids, (std::vector<std::string>{"A4", "A5", "S3", "S4"}));
}

TEST(CorpusTest, EmptyDirectory) {
  TempDir dir("empty");
  auto summary = run_corpus(dir.path, Command::carter, {});
  EXPECT_TRUE(summary.entries.empty());
  EXPECT_EQ(summary.errors, 0u);
  auto cli = run_cli("corpus " + dir.path.string() + " --command carter");
  EXPECT_EQ(cli.status, 0) << cli.output;
}

TEST(CorpusTest, MalformedFileIsIsolated) {
  TempDir dir("malformed");
  dir.write("s3.grp", serialize_group(symmetric_group(3), "S3"));
  dir.write("bad.grp", "degree 3\n(1 2\n");
  auto summary = run_corpus(dir.path, Command::carter, {});
  EXPECT_EQ(summary.entries.size(), 2u);
  EXPECT_EQ(summary.errors, 1u);
  EXPECT_EQ(summary.ok, 1u);
}

TEST(CliTest, CarterOnFileAndStdin) {
  TempDir dir("cli");
  dir.write("s4.grp", serialize_group(symmetric_group(4), "S4"));
  auto a = run_cli("carter " + (dir.path / "s4.grp").string());
  auto b = run_cli("carter < " + (dir.path / "s4.grp").string());
  EXPECT_EQ(a.status, 0) << a.output;
  EXPECT_EQ(a.output, b.output);
  expect_golden("cli_carter_s4.txt", a.output);
}

TEST(CliTest, InputErrorsExitWithTwo) {
  TempDir dir("cli_bad");
  dir.write("bad.grp", "degree 3\n(1 5)\n");
  EXPECT_EQ(run_cli("carter " + (dir.path / "bad.grp").string()).status, 2);
  EXPECT_EQ(run_cli("catalog --family H4").status, 2);
}

TEST(CliTest, CatalogQuery) {
  auto r = run_cli("catalog --family Al --l 3 --r 5 --t 1 --a-within-ghat yes --format structured");
  EXPECT_EQ(r.status, 0) << r.output;
  EXPECT_EQ(nlohmann::json::parse(r.output)["verdict"], "conjugate");
}
