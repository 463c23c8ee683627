#include "rpk/document.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "rpk/error.hpp"

namespace rpk {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw Error(Errc::ParseError, what); }

std::string position(std::string_view text, std::size_t byte) {
  // nlohmann reports the 1-based offset of the offending character.
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::string json_string(const std::string& s) { return json(s).dump(); }

}  // namespace

Instance parse_instance(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("- "); p != std::string::npos) msg = msg.substr(p + 2);
    fail(position(text, e.byte) + ": " + msg);
  }
  if (!doc.is_object()) fail("document must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    fail("missing array \"vertices\"");
  if (!doc.contains("arcs") || !doc["arcs"].is_array()) fail("missing array \"arcs\"");

  Instance inst;
  std::map<std::string, int> index;
  for (const json& v : doc["vertices"]) {
    if (!v.is_string()) fail("vertex names must be strings");
    std::string name = v.get<std::string>();
    if (!index.emplace(name, static_cast<int>(inst.names.size())).second)
      fail("duplicate vertex name " + json_string(name));
    inst.names.push_back(std::move(name));
  }
  if (inst.names.empty()) fail("at least one vertex is required");
  if (static_cast<int>(inst.names.size()) > kMaxVertices)
    fail("at most " + std::to_string(kMaxVertices) + " vertices are supported");

  std::vector<Arc> arcs;
  int k = 0;
  for (const json& a : doc["arcs"]) {
    const std::string where = "arc " + std::to_string(k++);
    if (!a.is_array() || a.size() != 3 || !a[0].is_string() || !a[1].is_string())
      fail(where + ": expected [from, to, colour]");
    if (!a[2].is_number_integer() || a[2].get<long long>() <= 0)
      fail(where + ": colour must be a positive integer");
    auto lookup = [&](const json& n) {
      auto it = index.find(n.get<std::string>());
      if (it == index.end()) fail(where + ": undeclared vertex " + json_string(n.get<std::string>()));
      return it->second;
    };
    arcs.push_back({lookup(a[0]), lookup(a[1]), static_cast<int>(a[2].get<long long>())});
  }
  try {
    inst.graph = ArcColouredDigraph(static_cast<int>(inst.names.size()), std::move(arcs));
  } catch (const Error& e) {
    fail(e.what());
  }
  return inst;
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_instance(text.str());
}

std::string serialize_instance(const Instance& inst) {
  std::string out = "{\n  \"vertices\": [";
  for (std::size_t i = 0; i < inst.names.size(); ++i)
    out += (i ? ", " : "") + json_string(inst.names[i]);
  out += "],\n  \"arcs\": [";
  const auto arcs = inst.graph.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "[" + json_string(inst.names[arcs[i].from]) + ", " + json_string(inst.names[arcs[i].to]) + ", " +
           std::to_string(arcs[i].colour) + "]";
  }
  out += arcs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string serialize_closure(const Digraph& closure, const std::vector<std::string>& names) {
  std::string out = "{\n  \"closure\": true,\n  \"vertices\": [";
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + json_string(names[i]);
  out += "],\n  \"arcs\": [";
  const auto arcs = closure.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += "[" + json_string(names[arcs[i].first]) + ", " + json_string(names[arcs[i].second]) + "]";
  }
  out += arcs.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string export_dot(const Instance& inst) {
  static constexpr const char* kPalette[12] = {
      "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
      "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#000000", "#aec7e8",
  };
  std::string out = "digraph D {\n  node [shape=circle];\n";
  for (const auto& name : inst.names) out += "  " + json_string(name) + ";\n";
  for (const Arc& a : inst.graph.arcs()) {
    out += "  " + json_string(inst.names[a.from]) + " -> " + json_string(inst.names[a.to]) +
           " [color=\"" + kPalette[(a.colour - 1) % 12] + "\", label=\"" +
           std::to_string(a.colour) + "\"];\n";
  }
  out += "}\n";
  return out;
}

VertexSet parse_vertex_list(std::string_view list, const std::vector<std::string>& names) {
  VertexSet s;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string_view token = list.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (!token.empty()) {
      int found = -1;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == token) found = static_cast<int>(i);
      if (found < 0) fail("unknown vertex \"" + std::string(token) + "\"");
      if (s.contains(found)) fail("vertex \"" + std::string(token) + "\" listed twice");
      s.insert(found);
    }
    start = end + 1;
  }
  return s;
}

std::string vertex_names(VertexSet s, const std::vector<std::string>& names) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    out += (first ? "" : ", ") + names[v];
    first = false;
  }
  return out + "}";
}

}  // namespace rpk
