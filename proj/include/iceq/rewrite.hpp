#pragma once

#include <optional>
#include <vector>

#include "iceq/algebra.hpp"
#include "iceq/quiver.hpp"

namespace iceq {

// Degree-lexicographic path order: length first, then arrow precedence
// scanned along the path. Multiplicative and total on composable paths.
struct PathOrder {
  std::vector<int> rank;  // arrow id -> precedence rank, smaller first

  static PathOrder declaration_order(const Quiver& q);
  static PathOrder from_names(const Quiver& q, const std::vector<std::string>& names);

  bool less(const Path& a, const Path& b) const;
};

// lead -> tail with every tail path strictly smaller than lead.
struct Rule {
  Path lead;
  AlgebraElement tail;
};

enum class ReduceStrategy { LeftmostLowestRule, RightmostHighestRule };

class RewritingSystem {
 public:
  RewritingSystem(Quiver q, PathOrder order, int degree_bound)
      : q_(std::move(q)), order_(std::move(order)), degree_bound_(degree_bound) {}

  const Quiver& quiver() const { return q_; }
  const PathOrder& order() const { return order_; }
  int degree_bound() const { return degree_bound_; }
  const std::vector<Rule>& rules() const { return rules_; }
  bool truncation_hit() const { return truncation_hit_; }
  // All overlaps below the bound resolved and no rule was discarded.
  bool complete() const { return !truncation_hit_; }

  bool is_irreducible(const Path& p) const;
  AlgebraElement reduce(const AlgebraElement& x,
                        ReduceStrategy s = ReduceStrategy::LeftmostLowestRule) const;

  friend RewritingSystem complete_rewriting(const Quiver& q,
                                            const std::vector<AlgebraElement>& relations,
                                            PathOrder order, int degree_bound);

 private:
  Quiver q_;
  PathOrder order_;
  int degree_bound_;
  std::vector<Rule> rules_;
  bool truncation_hit_ = false;

  // (rule index, start position in application order), or nullopt.
  std::optional<std::pair<size_t, size_t>> find_redex(const Path& p, ReduceStrategy s) const;
  AlgebraElement apply_rule(const Path& p, size_t rule, size_t pos) const;
};

// Two-sided Knuth-Bendix/Buchberger completion over the path algebra,
// truncated at degree_bound. Relations must be endpoint-homogeneous.
RewritingSystem complete_rewriting(const Quiver& q, const std::vector<AlgebraElement>& relations,
                                   PathOrder order, int degree_bound);

int default_degree_bound(const std::vector<AlgebraElement>& relations, int requested = 0);

}  // namespace iceq
