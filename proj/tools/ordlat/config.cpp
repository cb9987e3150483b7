#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ordlat/cli.hpp"
#include "ordlat/error.hpp"

namespace ordlat::cli {

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return std::string(s);
}

template <typename T>
T number(const std::string& key, const std::string& value) {
  T out{};
  const auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || end != value.data() + value.size()) {
    throw Error(ErrorKind::invalid_argument, "config key '" + key + "': malformed value '" + value + "'");
  }
  return out;
}

bool boolean(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorKind::invalid_argument, "config key '" + key + "': expected true or false, got '" + value + "'");
}

std::vector<int> int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(number<int>(key, trim(item)));
  if (out.empty()) throw Error(ErrorKind::invalid_argument, "config key '" + key + "': empty list");
  return out;
}

using Setter = std::function<void(RunConfig&, const std::string&, const std::string&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"group", [](RunConfig& c, auto&, auto& v) { c.group = v; }},
      {"cone", [](RunConfig& c, auto&, auto& v) { c.cones.push_back(v); }},
      {"target", [](RunConfig& c, auto&, auto& v) { c.target = v; }},
      {"radius", [](RunConfig& c, auto& k, auto& v) { c.radius = number<int>(k, v); }},
      {"conj-radius", [](RunConfig& c, auto& k, auto& v) { c.conj_radius = number<int>(k, v); }},
      {"radii", [](RunConfig& c, auto& k, auto& v) { c.radii = int_list(k, v); }},
      {"cap", [](RunConfig& c, auto& k, auto& v) { c.cap = number<std::size_t>(k, v); }},
      {"limit", [](RunConfig& c, auto& k, auto& v) { c.limit = number<std::size_t>(k, v); }},
      {"format",
       [](RunConfig& c, auto& k, auto& v) {
         if (v != "text" && v != "records") {
           throw Error(ErrorKind::invalid_argument, "config key '" + k + "': expected text or records");
         }
         c.format = v;
       }},
      {"seed", [](RunConfig& c, auto& k, auto& v) { c.seed = number<std::uint64_t>(k, v); }},
      {"threads", [](RunConfig& c, auto& k, auto& v) { c.threads = number<unsigned>(k, v); }},
      {"term", [](RunConfig& c, auto&, auto& v) { c.terms.push_back(v); }},
      {"point", [](RunConfig& c, auto&, auto& v) { c.point = v; }},
      {"open-set", [](RunConfig& c, auto&, auto& v) { c.open_set = v; }},
      {"from", [](RunConfig& c, auto&, auto& v) { c.from = v; }},
      {"to", [](RunConfig& c, auto&, auto& v) { c.to = v; }},
      {"n", [](RunConfig& c, auto& k, auto& v) { c.n = number<int>(k, v); }},
      {"element", [](RunConfig& c, auto&, auto& v) { c.element = v; }},
      {"bound", [](RunConfig& c, auto& k, auto& v) { c.bound = number<int>(k, v); }},
      {"exponent", [](RunConfig& c, auto& k, auto& v) { c.exponent = number<int>(k, v); }},
      {"samples", [](RunConfig& c, auto& k, auto& v) { c.samples = number<std::size_t>(k, v); }},
      {"bi", [](RunConfig& c, auto& k, auto& v) { c.bi = boolean(k, v); }},
      {"assume-cofinal", [](RunConfig& c, auto& k, auto& v) { c.assume_cofinal = boolean(k, v); }},
      {"list", [](RunConfig& c, auto& k, auto& v) { c.list = boolean(k, v); }},
      {"emit-dot", [](RunConfig& c, auto&, auto& v) { c.emit_dot = v; }},
      {"certificate", [](RunConfig& c, auto&, auto& v) { c.certificate = v; }},
  };
  return table;
}

}  // namespace

RunConfig parse_config(const std::string& text, const std::string& source) {
  RunConfig config;
  std::stringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw Error(ErrorKind::invalid_argument,
                  source + ":" + std::to_string(line_no) + ": expected key=value");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw Error(ErrorKind::invalid_argument,
                  source + ":" + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    it->second(config, key, value);
  }
  return config;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read config file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path.string());
}

}  // namespace ordlat::cli
