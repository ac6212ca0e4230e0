#include "cegis/config.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "cegis/error.hpp"

namespace cegis {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ConfigError("config line " + std::to_string(line) + ": " + msg);
}

std::string parse_string(std::string_view v, std::size_t line) {
  if (v.size() < 2 || v.front() != '"' || v.back() != '"') fail(line, "expected a quoted string");
  std::string out;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (v[i] == '\\') {
      if (i + 2 >= v.size()) fail(line, "dangling escape");
      ++i;
    } else if (v[i] == '"') {
      fail(line, "unescaped quote");
    }
    out += v[i];
  }
  return out;
}

template <typename T>
T parse_int(std::string_view v, std::size_t line) {
  T out{};
  const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || p != v.data() + v.size()) {
    fail(line, "expected an integer, got '" + std::string(v) + "'");
  }
  return out;
}

std::vector<Natural> parse_array(std::string_view v, std::size_t line) {
  if (v.size() < 2 || v.front() != '[' || v.back() != ']') fail(line, "expected an array");
  std::vector<Natural> out;
  std::string_view body = trim(v.substr(1, v.size() - 2));
  while (!body.empty()) {
    const auto comma = body.find(',');
    out.push_back(parse_int<Natural>(trim(body.substr(0, comma)), line));
    if (comma == std::string_view::npos) break;
    body = trim(body.substr(comma + 1));
  }
  return out;
}

// Drops a trailing comment that is not inside a string.
std::string_view strip_comment(std::string_view s) {
  bool in_string = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && in_string) {
      ++i;
    } else if (s[i] == '"') {
      in_string = !in_string;
    } else if (s[i] == '#' && !in_string) {
      return s.substr(0, i);
    }
  }
  return s;
}

}  // namespace

std::string to_config_text(const RunConfig& c) {
  std::ostringstream out;
  out << "family = " << quote(c.family) << "\n";
  out << "target = " << quote(c.target) << "\n";
  out << "engine = " << quote(c.engine) << "\n";
  out << "generalizer = " << quote(c.generalizer) << "\n";
  out << "strategy = " << quote(c.strategy) << "\n";
  out << "seed = " << c.seed << "\n";
  out << "schedule = " << quote(c.schedule) << "\n";
  if (c.budget) out << "budget = " << *c.budget << "\n";
  if (c.trace_length) out << "trace_length = " << *c.trace_length << "\n";
  if (c.window) out << "window = " << *c.window << "\n";
  if (c.universe_bound) out << "universe_bound = " << *c.universe_bound << "\n";
  if (c.grid) out << "grid = " << *c.grid << "\n";
  out << "avoid = [";
  for (std::size_t i = 0; i < c.avoid.size(); ++i) out << (i ? ", " : "") << c.avoid[i];
  out << "]\n";
  out << "out = " << quote(c.out) << "\n";
  return out.str();
}

RunConfig parse_config_text(std::string_view text) {
  RunConfig c;
  std::set<std::string> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    line = trim(strip_comment(line));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) fail(line_no, "expected key = value");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (!seen.insert(key).second) fail(line_no, "duplicate key '" + key + "'");

    if (key == "family") {
      c.family = parse_string(value, line_no);
    } else if (key == "target") {
      c.target = parse_string(value, line_no);
    } else if (key == "engine") {
      c.engine = parse_string(value, line_no);
    } else if (key == "generalizer") {
      c.generalizer = parse_string(value, line_no);
    } else if (key == "strategy") {
      c.strategy = parse_string(value, line_no);
    } else if (key == "seed") {
      c.seed = parse_int<Natural>(value, line_no);
    } else if (key == "schedule") {
      c.schedule = parse_string(value, line_no);
    } else if (key == "budget") {
      c.budget = parse_int<std::size_t>(value, line_no);
    } else if (key == "trace_length") {
      c.trace_length = parse_int<std::size_t>(value, line_no);
    } else if (key == "window") {
      c.window = parse_int<std::size_t>(value, line_no);
    } else if (key == "universe_bound") {
      c.universe_bound = parse_int<Natural>(value, line_no);
    } else if (key == "grid") {
      c.grid = parse_int<std::int64_t>(value, line_no);
    } else if (key == "avoid") {
      c.avoid = parse_array(value, line_no);
    } else if (key == "out") {
      c.out = parse_string(value, line_no);
    } else {
      fail(line_no, "unknown key '" + key + "'");
    }
  }
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

}  // namespace cegis
