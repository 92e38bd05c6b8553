#pragma once

// Golden CLI cases: <name>.args holds one argument per line; <name>.out,
// <name>.err and <name>.exit hold the expected stdout, stderr and exit code.
// Missing .out/.err files mean empty output.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace golden {

struct Case {
  std::string name;
  std::vector<std::string> args;
  std::string out;
  std::string err;
  int exit_code = 0;
};

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return {};
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<Case> load(const std::filesystem::path& dir) {
  std::vector<Case> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() != ".args") continue;
    Case c;
    c.name = entry.path().stem().string();
    std::istringstream lines(slurp(entry.path()));
    for (std::string line; std::getline(lines, line);) c.args.push_back(line);
    const auto base = dir / c.name;
    c.out = slurp(base.string() + ".out");
    c.err = slurp(base.string() + ".err");
    const std::string code = slurp(base.string() + ".exit");
    c.exit_code = code.empty() ? 0 : std::stoi(code);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const Case& a, const Case& b) { return a.name < b.name; });
  return out;
}

}  // namespace golden
