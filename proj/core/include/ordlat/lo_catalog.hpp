#pragma once

// Explicit lists of positive cones. A list marked complete is all of LO(G);
// only groups with finitely many orderings can produce one.

#include <vector>

#include "ordlat/cone.hpp"

namespace ordlat {

class FiniteLoSpace {
 public:
  // An unmarked list: usable for searches, refused by whole-space checks.
  FiniteLoSpace(GroupPtr group, std::vector<ConePtr> cones);

  const GroupPtr& group() const noexcept { return group_; }
  const std::vector<ConePtr>& cones() const noexcept { return cones_; }
  std::size_t size() const noexcept { return cones_.size(); }
  bool is_complete() const noexcept { return complete_; }

  // Throws incomplete_lo_space unless the list is all of LO(G).
  void require_complete(std::string_view operation) const;

 private:
  friend FiniteLoSpace complete_lo_space(const GroupPtr& group);
  GroupPtr group_;
  std::vector<ConePtr> cones_;
  bool complete_ = false;
};

// All 2^n cones P_epsilon of T_n (epsilon in binary order, + before -, first
// entry most significant), or the two orderings of an infinite cyclic backend.
FiniteLoSpace complete_lo_space(const GroupPtr& group);

// Whether complete_lo_space supports the group.
bool has_finite_lo_space(const Group& group) noexcept;

}  // namespace ordlat
