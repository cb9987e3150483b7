#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "ordlat/ball.hpp"

namespace ordlat::cli {

enum ExitCode : int { exit_ok = 0, exit_error = 1, exit_inconclusive = 2 };

struct RunConfig {
  std::string group;
  std::vector<std::string> cones;
  std::string target;
  int radius = 3;
  int conj_radius = 2;
  std::vector<int> radii;
  std::size_t cap = default_cap;
  std::size_t limit = 0;
  std::string format = "text";
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::vector<std::string> terms;
  std::string point = "1";
  std::string open_set;
  std::string from;
  std::string to;
  int n = 0;
  std::string element;
  int bound = 4;
  int exponent = 2;
  std::size_t samples = 0;
  bool bi = false;
  bool assume_cofinal = false;
  bool list = false;
  std::string emit_dot;
  std::string certificate;
};

// `key=value` lines with the flag names as keys (`conj-radius=3`); `cone` and
// `term` may repeat. Blank lines and lines starting with '#' are skipped.
// Throws ordlat::Error naming the key on unknown keys or malformed values.
RunConfig load_config(const std::filesystem::path& path);
RunConfig parse_config(const std::string& text, const std::string& source = "config");

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ordlat::cli
