#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "rpk/cli.hpp"

namespace golden {

struct Case {
  std::string name;  // golden file stem
  std::vector<std::string> args;
  int exit;
};

inline std::string path(const std::string& rel) { return std::string(RPK_SOURCE_DIR) + "/" + rel; }

inline std::string fixture_file(const std::string& f) { return path("data/fixtures/" + f + ".json"); }

inline std::vector<Case> cases() {
  std::vector<Case> out;
  for (const char* f : {"FIG4", "QT4", "CB5", "TB4"}) {
    const std::string file = fixture_file(f);
    const bool fig4 = std::string(f) == "FIG4";
    out.push_back({std::string(f) + ".classify", {"--json", "classify", file}, 0});
    out.push_back({std::string(f) + ".solve", {"--json", "solve", file}, fig4 ? 1 : 0});
    const std::string k = fig4 ? "y1,y2" : std::string(f) == "QT4" ? "x" : "u4";
    out.push_back({std::string(f) + ".validate", {"--json", "validate", "--kernel", k, file}, fig4 ? 1 : 0});
  }
  return out;
}

inline std::string slurp(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Outcome {
  int code;
  std::string out, err;
};

inline Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = rpk::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

/// Empty on success, otherwise what went wrong.
inline std::string check(const Case& c) {
  auto o = run(c.args);
  if (o.code != c.exit) return "exit " + std::to_string(o.code) + ", expected " + std::to_string(c.exit);
  const std::string want = slurp(path("tests/golden/" + c.name + ".json"));
  if (want.empty()) return "missing golden";
  if (o.out != want) return "output differs";
  return "";
}

}  // namespace golden
