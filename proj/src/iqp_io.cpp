#include "iceq/iqp_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace iceq {

using ordered_json = nlohmann::ordered_json;

namespace {

[[noreturn]] void fail(const std::string& filename, const std::string& msg) {
  throw InputError(filename + ": " + msg);
}

}  // namespace

IqpFile parse_iqp(const std::string& text, const std::string& filename) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(filename, std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) fail(filename, "top level must be an object");

  static const std::set<std::string> known = {"vertices", "arrows", "frozen_vertices",
                                              "frozen_arrows", "potential"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!known.count(it.key())) fail(filename, "unknown key '" + it.key() + "'");

  IqpFile f;
  Quiver& q = f.ice.quiver;

  if (!j.contains("vertices") || !j["vertices"].is_array())
    fail(filename, "missing or malformed 'vertices' array");
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail(filename, "vertex labels must be strings");
    try {
      q.add_vertex(v.get<std::string>());
    } catch (const InputError& e) {
      fail(filename, e.what());
    }
  }

  if (j.contains("arrows")) {
    if (!j["arrows"].is_array()) fail(filename, "'arrows' must be an array");
    for (const auto& a : j["arrows"]) {
      if (!a.is_object() || !a.contains("name") || !a.contains("source") || !a.contains("target"))
        fail(filename, "each arrow needs 'name', 'source', 'target'");
      try {
        q.add_arrow(a["name"].get<std::string>(), a["source"].get<std::string>(),
                    a["target"].get<std::string>());
      } catch (const InputError& e) {
        fail(filename, e.what());
      }
    }
  }

  auto read_set = [&](const char* key, auto resolve) {
    std::vector<int> ids;
    if (!j.contains(key)) return ids;
    if (!j[key].is_array()) fail(filename, std::string("'") + key + "' must be an array");
    std::set<int> seen;
    for (const auto& s : j[key]) {
      if (!s.is_string()) fail(filename, std::string("'") + key + "' entries must be strings");
      int id;
      try {
        id = resolve(s.get<std::string>());
      } catch (const InputError& e) {
        fail(filename, e.what());
      }
      if (!seen.insert(id).second)
        fail(filename, std::string("duplicate entry in '") + key + "'");
    }
    ids.assign(seen.begin(), seen.end());
    return ids;
  };
  f.ice.frozen_vertices = read_set("frozen_vertices", [&](const std::string& s) {
    return q.require_vertex(s);
  });
  f.ice.frozen_arrows = read_set("frozen_arrows", [&](const std::string& s) {
    return q.require_arrow(s);
  });
  try {
    f.ice.validate();
  } catch (const InputError& e) {
    fail(filename, e.what());
  }

  if (j.contains("potential")) {
    if (!j["potential"].is_array()) fail(filename, "'potential' must be an array");
    std::vector<std::pair<Rat, Path>> cycles;
    int idx = 0;
    for (const auto& t : j["potential"]) {
      if (!t.is_object() || !t.contains("coeff") || !t.contains("cycle"))
        fail(filename, "each potential term needs 'coeff' and 'cycle'");
      Rat c;
      try {
        c = Rat::parse(t["coeff"].get<std::string>());
      } catch (const std::exception& e) {
        fail(filename, "potential term " + std::to_string(idx) + ": " + e.what());
      }
      if (!t["cycle"].is_array() || t["cycle"].empty())
        fail(filename, "potential term " + std::to_string(idx) + ": 'cycle' must be a nonempty array");
      std::vector<std::string> word;
      for (const auto& n : t["cycle"]) {
        if (!n.is_string())
          fail(filename, "potential term " + std::to_string(idx) + ": cycle entries must be strings");
        word.push_back(n.get<std::string>());
      }
      try {
        Path p = q.path_from_names(word);
        if (q.source(p) != q.target(p))
          fail(filename, "potential term " + std::to_string(idx) + ": not a cycle");
        cycles.emplace_back(c, p);
      } catch (const InputError& e) {
        fail(filename, "potential term " + std::to_string(idx) + ": " + e.what());
      }
      ++idx;
    }
    try {
      f.potential = Potential::make(q, cycles);
    } catch (const InputError& e) {
      fail(filename, e.what());
    }
  }

  validate_iqp(f, filename);
  return f;
}

IqpFile parse_iqp_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_iqp(ss.str(), path);
}

void validate_iqp(const IqpFile& f, const std::string& filename) {
  for (const auto& a : f.ice.quiver.arrows())
    if (a.source == a.target)
      fail(filename, "loop in input: arrow '" + a.name + "'");
}

std::string serialize_iqp(const IqpFile& f) {
  const Quiver& q = f.ice.quiver;
  ordered_json j;
  j["vertices"] = ordered_json::array();
  for (const auto& v : q.vertices()) j["vertices"].push_back(v.label);
  j["arrows"] = ordered_json::array();
  for (const auto& a : q.arrows()) {
    ordered_json ja;
    ja["name"] = a.name;
    ja["source"] = q.vertex(a.source).label;
    ja["target"] = q.vertex(a.target).label;
    j["arrows"].push_back(ja);
  }
  j["frozen_vertices"] = ordered_json::array();
  for (int v : f.ice.frozen_vertices) j["frozen_vertices"].push_back(q.vertex(v).label);
  j["frozen_arrows"] = ordered_json::array();
  for (int a : f.ice.frozen_arrows) j["frozen_arrows"].push_back(q.arrow(a).name);
  j["potential"] = ordered_json::array();
  for (const auto& [c, p] : f.potential.terms()) {
    ordered_json jt;
    jt["coeff"] = c.str();
    ordered_json word = ordered_json::array();
    for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it)
      word.push_back(q.arrow(*it).name);
    jt["cycle"] = word;
    j["potential"].push_back(jt);
  }
  return j.dump(2) + "\n";
}

}  // namespace iceq
