#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordlat/cli.hpp"
#include "ordlat/error.hpp"

using namespace ordlat;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "ordlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string l;
  while (std::getline(in, l)) {
    if (l == line) return true;
  }
  return false;
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST(Cli, EnumerateCones) {
  const auto r = run_cli({"enumerate-cones", "--group", "tararin:n=2", "--radius", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "count=4")) << r.out;
}

TEST(Cli, EvalTerm) {
  const auto r = run_cli({"eval-term", "--group", "zn:rank=1", "--cone", "lex:perm=1;signs=+", "--term", "a /\\ 1",
                          "--point", "a^2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "output=a^2")) << r.out;
  EXPECT_TRUE(has_line(r.out, "a^2 -> 1*a^2 [row 0, col 1]")) << r.out;
}

TEST(Cli, TararinConjugator) {
  const auto r = run_cli({"tararin-conjugator", "--group", "tararin:n=4", "--from", "+,+,+", "--to", "-,+,+", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(has_line(r.out, "g=x2")) << r.out;
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"orbit-contains", "-g", "zn:rank=2", "-c", "lex:perm=1,2;signs=+,+", "--target",
                     "lex:perm=2,1;signs=+,+", "-r", "2", "-s", "2"})
                .code,
            2);
  EXPECT_EQ(run_cli({"nontrivial-witness", "-g", "zn:rank=1", "-t", "a*a^-1", "-r", "3"}).code, 2);
  EXPECT_EQ(run_cli({"nontrivial-witness", "-g", "zn:rank=1", "-t", "a /\\ 1", "-r", "3"}).code, 0);
  EXPECT_EQ(run_cli({"eval-term", "-g", "zn:rank=1", "-c", "dehornoy", "-t", "a"}).code, 1);
  EXPECT_EQ(run_cli({"no-such-command"}).code, 1);
  EXPECT_EQ(run_cli({"enumerate-cones", "--radius", "2"}).code, 1);
  const auto v = run_cli({"--version"});
  EXPECT_EQ(v.code, 0);
  EXPECT_NE(v.out.find("ordlat"), std::string::npos);
}

TEST(Cli, Certificates) {
  const auto r = run_cli({"cofinal-obstruction", "-g", "braid:n=3", "-c", "dehornoy", "-e", "s2*s1*s2^2*s1*s2", "-r",
                          "3", "--bound", "4", "--format", "records"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "certificate.kind=cofinality-obstruction"));
  const auto path = temp_file("ordlat_cert.txt", r.out);
  const auto v = run_cli({"verify-certificate", "--certificate", path.string()});
  EXPECT_EQ(v.code, 0) << v.out << v.err;
  EXPECT_TRUE(has_line(v.out, "valid=true"));

  const auto refused = run_cli({"cofinal-obstruction", "-g", "zn:rank=2", "-c", "lex:perm=1,2;signs=+,+", "-e", "b"});
  EXPECT_EQ(refused.code, 2);
  std::filesystem::remove(path);
}

TEST(Cli, RecordsAreDeterministic) {
  const std::vector<std::string> args{"check-axioms", "-g",        "free:rank=2", "-c",     "magnus",
                                      "-r",           "2",         "--bi",        "--seed", "7",
                                      "--samples",    "500",       "--format",    "records"};
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(has_line(a.out, "violations=0")) << a.out;
  for (const auto& line : {"pairs_checked=272", "triples_checked=500"}) EXPECT_TRUE(has_line(a.out, line)) << a.out;
}

TEST(Cli, ConfigFile) {
  const auto empty = cli::parse_config("");
  EXPECT_EQ(empty.format, "text");
  EXPECT_EQ(empty.cap, 1'000'000U);

  const auto cfg = cli::parse_config("# comment\ngroup=braid:n=3\ncone=dehornoy\nradius=2\n");
  EXPECT_EQ(cfg.group, "braid:n=3");
  EXPECT_EQ(cfg.cones, std::vector<std::string>{"dehornoy"});

  try {
    cli::parse_config("foo=1\n");
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("'foo'"), std::string::npos);
  }
  EXPECT_THROW(cli::parse_config("radius=two\n"), Error);

  const auto path = temp_file("ordlat_config.txt", "group=tararin:n=2\nradius=1\n");
  // The flag overrides the file's radius.
  const auto r = run_cli({"enumerate-cones", "--config", path.string(), "--radius", "4"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "radius=4"));
  EXPECT_TRUE(has_line(r.out, "count=4"));
  const auto bad = temp_file("ordlat_bad_config.txt", "foo=1\n");
  const auto rb = run_cli({"enumerate-cones", "--config", bad.string()});
  EXPECT_EQ(rb.code, 1);
  EXPECT_NE(rb.err.find("foo"), std::string::npos);
  std::filesystem::remove(path);
  std::filesystem::remove(bad);
}

TEST(Cli, CapFromEnvironment) {
  ::setenv("ORDLAT_CAP", "10", 1);
  const auto r = run_cli({"enumerate-cones", "-g", "free:rank=2", "-r", "3"});
  ::unsetenv("ORDLAT_CAP");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("cap exceeded"), std::string::npos) << r.err;
  ::setenv("ORDLAT_CAP", "10", 1);
  const auto flagged = run_cli({"enumerate-cones", "-g", "zn:rank=1", "-r", "3", "--cap", "100"});
  ::unsetenv("ORDLAT_CAP");
  EXPECT_EQ(flagged.code, 0) << flagged.err;
}

TEST(Cli, OtherCommands) {
  EXPECT_TRUE(has_line(run_cli({"normalize-term", "-g", "free:rank=2", "-t", "a*(b \\/ 1)"}).out, "form=a*b \\/ a"));
  EXPECT_TRUE(has_line(run_cli({"basic-check", "-g", "tararin:n=2", "-t", "x1 \\/ 1"}).out, "verdict=not-basic"));
  EXPECT_TRUE(has_line(run_cli({"minimal-sets", "-g", "tararin:n=1"}).out, "orbits=2"));
  EXPECT_TRUE(has_line(run_cli({"finite-check", "-g", "tararin:n=3"}).out, "lo_size=8"));
  EXPECT_TRUE(has_line(run_cli({"isolated-scan", "-g", "zn:rank=1", "--open-set", "a", "--radii", "1,2,3"}).out,
                       "outcome=certified"));
  EXPECT_TRUE(has_line(run_cli({"open-set", "-g", "free:rank=2", "--open-set", "a,a^-1", "-r", "2"}).out, "count=0"));
  EXPECT_TRUE(has_line(run_cli({"orbit", "-g", "zn:rank=2", "-c", "lex:perm=2,1;signs=-,+", "-s", "3"}).out, "count=1"));
  EXPECT_TRUE(has_line(run_cli({"conradian-check", "-g", "tararin:n=2", "-c", "tararin:+,-", "-r", "2"}).out,
                       "conradian_up_to_radius=true"));
  EXPECT_TRUE(has_line(run_cli({"cofinal-check", "-g", "zn:rank=1", "-c", "lex", "-e", "a", "-r", "3"}).out,
                       "cofinal_up_to=true"));
  const auto k = run_cli({"kernel-falsify", "-g", "zn:rank=1", "-c", "lex", "--target", "rev(lex)", "-t", "a /\\ 1"});
  EXPECT_EQ(k.code, 0);
  EXPECT_TRUE(has_line(k.out, "found=true"));
}

TEST(Cli, EmitsDot) {
  const auto path = std::filesystem::temp_directory_path() / "ordlat_orbit.dot";
  const auto r = run_cli({"orbit", "-g", "tararin:n=2", "-c", "tararin:+,+", "-s", "2", "-r", "2", "--emit-dot",
                          path.string()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_NE(text.str().find("digraph orbit"), std::string::npos);
  EXPECT_NE(text.str().find("-> p1"), std::string::npos);
  std::filesystem::remove(path);
}
