#pragma once

#include <optional>
#include <string>

#include "bridgeland/io.hpp"

namespace bridgeland::cli {

struct RunConfig {
  std::string command;
  long n = 1;
  std::optional<long> ell;
  std::optional<std::string> v;
  std::optional<std::string> window;
  std::optional<std::string> m_range;  // "lo..hi"
  std::optional<std::string> svg_path;
  std::optional<std::string> line;
  std::optional<std::string> s;
  std::optional<std::string> t2;
  std::optional<std::string> lambda;
  std::optional<long> m;
  std::optional<std::string> g;
  std::optional<std::string> z;
  std::string format = "json";
  bool verify = false;
  int jobs = 1;
  long bound = 10;
};

struct RunResult {
  int code = 0;
  Json out;
  std::optional<std::string> svg;
};

// Never throws: errors come back as {"error": {...}} with exit code 2 or 3.
RunResult run(const RunConfig& cfg);

std::pair<long, long> parse_m_range(const std::string& text);
std::string render(const Json& j, const std::string& format);

}  // namespace bridgeland::cli
