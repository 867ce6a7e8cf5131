#pragma once

// Golden CLI cases: NAME.cmd holds one argument per line, NAME.out the
// expected stdout, then "--- stderr", stderr, and "--- exit N".

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "unbias/cli.hpp"

namespace golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  std::string expected;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline std::vector<Case> load(const std::string& dir) {
  std::vector<Case> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".cmd") continue;
    Case c;
    c.name = entry.path().stem().string();
    std::istringstream lines(read_file(entry.path()));
    for (std::string line; std::getline(lines, line);) c.args.push_back(line);
    auto expected = entry.path();
    c.expected = read_file(expected.replace_extension(".out"));
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Case& a, const Case& b) { return a.name < b.name; });
  return out;
}

inline std::string run(const Case& c) {
  std::ostringstream out, err;
  std::istringstream in;
  const int code = unbias::run_cli(c.args, out, err, in);
  return out.str() + "--- stderr\n" + err.str() + "--- exit " + std::to_string(code) + "\n";
}

}  // namespace golden
