#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "iceq/rational.hpp"

namespace iceq {

// Input/validation failure with a human-readable location.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct Vertex {
  int id = -1;
  std::string label;
};

struct Arrow {
  int id = -1;
  std::string name;
  int source = -1;
  int target = -1;
  int degree = 0;  // 0 for ordinary quivers; generators of dg presentations carry -1, -2
};

// A path a_m...a_1 stored in application order: arrows[0] = a_1 is
// applied first. Lazy paths have empty arrows and carry their vertex in
// source. Composition follows the gf convention: compose(p, q) = pq
// applies q first.
struct Path {
  int source = -1;
  std::vector<int> arrows;

  bool is_lazy() const { return arrows.empty(); }
  size_t length() const { return arrows.size(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.arrows == b.arrows;
  }
  friend bool operator!=(const Path& a, const Path& b) { return !(a == b); }
  // Structural deglex: length, then arrow ids, then source (for lazies).
  friend bool operator<(const Path& a, const Path& b) {
    if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
    if (a.arrows != b.arrows) return a.arrows < b.arrows;
    return a.source < b.source;
  }
};

class Quiver {
 public:
  int add_vertex(const std::string& label);
  int add_arrow(const std::string& name, const std::string& source_label,
                const std::string& target_label, int degree = 0);
  int add_arrow_ids(const std::string& name, int source, int target, int degree = 0);

  int num_vertices() const { return (int)vertices_.size(); }
  int num_arrows() const { return (int)arrows_.size(); }
  const Vertex& vertex(int id) const { return vertices_.at(id); }
  const Arrow& arrow(int id) const { return arrows_.at(id); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  std::optional<int> vertex_by_label(const std::string& label) const;
  std::optional<int> arrow_by_name(const std::string& name) const;
  int require_arrow(const std::string& name) const;
  int require_vertex(const std::string& label) const;

  std::vector<int> arrows_from(int v) const;
  std::vector<int> arrows_to(int v) const;
  bool has_loops() const;
  bool is_graded() const;  // any arrow of nonzero degree

  // Paths.
  Path lazy(int v) const;
  bool valid_path(const Path& p) const;
  std::optional<Path> path_from_arrow_ids(const std::vector<int>& ids) const;
  Path path_from_names(const std::vector<std::string>& word) const;  // word order a_m...a_1
  int source(const Path& p) const { return p.source; }
  int target(const Path& p) const;
  int path_degree(const Path& p) const;
  std::optional<Path> compose(const Path& p, const Path& q) const;  // pq, q first
  std::string path_str(const Path& p) const;  // printed in word order

 private:
  std::vector<Vertex> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

// Finite quiver with a distinguished frozen subquiver.
struct IceQuiver {
  Quiver quiver;
  std::vector<int> frozen_vertices;  // sorted ids
  std::vector<int> frozen_arrows;    // sorted ids

  bool is_frozen_vertex(int v) const;
  bool is_frozen_arrow(int a) const;
  std::vector<int> unfrozen_vertices() const;
  std::vector<int> unfrozen_arrows() const;
  Quiver frozen_subquiver() const;
  bool is_full() const;
  // Subquiver condition: every frozen arrow has frozen endpoints.
  void validate() const;
};

}  // namespace iceq
