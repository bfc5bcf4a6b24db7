#include "iceq/quiver.hpp"

#include <algorithm>

namespace iceq {

int Quiver::add_vertex(const std::string& label) {
  if (vertex_index_.count(label))
    throw InputError("duplicate vertex label '" + label + "'");
  int id = (int)vertices_.size();
  vertices_.push_back({id, label});
  vertex_index_[label] = id;
  return id;
}

int Quiver::add_arrow(const std::string& name, const std::string& source_label,
                      const std::string& target_label, int degree) {
  auto s = vertex_by_label(source_label);
  if (!s) throw InputError("arrow '" + name + "' has unknown source vertex '" + source_label + "'");
  auto t = vertex_by_label(target_label);
  if (!t) throw InputError("arrow '" + name + "' has unknown target vertex '" + target_label + "'");
  return add_arrow_ids(name, *s, *t, degree);
}

int Quiver::add_arrow_ids(const std::string& name, int source, int target, int degree) {
  if (arrow_index_.count(name)) throw InputError("duplicate arrow name '" + name + "'");
  if (source < 0 || source >= num_vertices() || target < 0 || target >= num_vertices())
    throw InputError("arrow '" + name + "' has out-of-range endpoint");
  int id = (int)arrows_.size();
  arrows_.push_back({id, name, source, target, degree});
  arrow_index_[name] = id;
  return id;
}

std::optional<int> Quiver::vertex_by_label(const std::string& label) const {
  auto it = vertex_index_.find(label);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> Quiver::arrow_by_name(const std::string& name) const {
  auto it = arrow_index_.find(name);
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

int Quiver::require_arrow(const std::string& name) const {
  auto a = arrow_by_name(name);
  if (!a) throw InputError("unknown arrow name '" + name + "'");
  return *a;
}

int Quiver::require_vertex(const std::string& label) const {
  auto v = vertex_by_label(label);
  if (!v) throw InputError("unknown vertex label '" + label + "'");
  return *v;
}

std::vector<int> Quiver::arrows_from(int v) const {
  std::vector<int> out;
  for (const auto& a : arrows_)
    if (a.source == v) out.push_back(a.id);
  return out;
}

std::vector<int> Quiver::arrows_to(int v) const {
  std::vector<int> out;
  for (const auto& a : arrows_)
    if (a.target == v) out.push_back(a.id);
  return out;
}

bool Quiver::has_loops() const {
  for (const auto& a : arrows_)
    if (a.source == a.target) return true;
  return false;
}

bool Quiver::is_graded() const {
  for (const auto& a : arrows_)
    if (a.degree != 0) return true;
  return false;
}

Path Quiver::lazy(int v) const {
  if (v < 0 || v >= num_vertices()) throw InputError("lazy path at out-of-range vertex");
  return Path{v, {}};
}

bool Quiver::valid_path(const Path& p) const {
  if (p.source < 0 || p.source >= num_vertices()) return false;
  if (p.is_lazy()) return true;
  if (arrow(p.arrows[0]).source != p.source) return false;
  for (size_t i = 0; i + 1 < p.arrows.size(); ++i)
    if (arrow(p.arrows[i + 1]).source != arrow(p.arrows[i]).target) return false;
  return true;
}

std::optional<Path> Quiver::path_from_arrow_ids(const std::vector<int>& ids) const {
  if (ids.empty()) return std::nullopt;
  Path p{arrow(ids[0]).source, ids};
  if (!valid_path(p)) return std::nullopt;
  return p;
}

Path Quiver::path_from_names(const std::vector<std::string>& word) const {
  std::vector<int> ids;
  for (auto it = word.rbegin(); it != word.rend(); ++it) ids.push_back(require_arrow(*it));
  auto p = path_from_arrow_ids(ids);
  if (!p) throw InputError("non-composable path word");
  return *p;
}

int Quiver::target(const Path& p) const {
  if (p.is_lazy()) return p.source;
  return arrow(p.arrows.back()).target;
}

int Quiver::path_degree(const Path& p) const {
  int d = 0;
  for (int a : p.arrows) d += arrow(a).degree;
  return d;
}

std::optional<Path> Quiver::compose(const Path& p, const Path& q) const {
  if (target(q) != p.source) return std::nullopt;
  if (q.is_lazy()) return p;
  Path r = q;
  r.arrows.insert(r.arrows.end(), p.arrows.begin(), p.arrows.end());
  return r;
}

std::string Quiver::path_str(const Path& p) const {
  if (p.is_lazy()) return "e_" + vertex(p.source).label;
  std::string s;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) s += arrow(*it).name;
  return s;
}

bool IceQuiver::is_frozen_vertex(int v) const {
  return std::binary_search(frozen_vertices.begin(), frozen_vertices.end(), v);
}

bool IceQuiver::is_frozen_arrow(int a) const {
  return std::binary_search(frozen_arrows.begin(), frozen_arrows.end(), a);
}

std::vector<int> IceQuiver::unfrozen_vertices() const {
  std::vector<int> out;
  for (const auto& v : quiver.vertices())
    if (!is_frozen_vertex(v.id)) out.push_back(v.id);
  return out;
}

std::vector<int> IceQuiver::unfrozen_arrows() const {
  std::vector<int> out;
  for (const auto& a : quiver.arrows())
    if (!is_frozen_arrow(a.id)) out.push_back(a.id);
  return out;
}

Quiver IceQuiver::frozen_subquiver() const {
  Quiver f;
  for (int v : frozen_vertices) f.add_vertex(quiver.vertex(v).label);
  for (int a : frozen_arrows) {
    const Arrow& ar = quiver.arrow(a);
    f.add_arrow(ar.name, quiver.vertex(ar.source).label, quiver.vertex(ar.target).label);
  }
  return f;
}

bool IceQuiver::is_full() const {
  size_t count = 0;
  for (const auto& a : quiver.arrows())
    if (is_frozen_vertex(a.source) && is_frozen_vertex(a.target)) {
      if (!is_frozen_arrow(a.id)) return false;
      ++count;
    }
  return count == frozen_arrows.size();
}

void IceQuiver::validate() const {
  for (int v : frozen_vertices)
    if (v < 0 || v >= quiver.num_vertices())
      throw InputError("frozen vertex id out of range");
  for (int a : frozen_arrows) {
    if (a < 0 || a >= quiver.num_arrows()) throw InputError("frozen arrow id out of range");
    const Arrow& ar = quiver.arrow(a);
    if (!is_frozen_vertex(ar.source) || !is_frozen_vertex(ar.target))
      throw InputError("frozen arrow endpoint: arrow '" + ar.name +
                       "' is frozen but an endpoint is not");
  }
}

}  // namespace iceq
