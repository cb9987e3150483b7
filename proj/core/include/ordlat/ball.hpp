#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ordlat/group.hpp"

namespace ordlat {

inline constexpr std::size_t default_cap = 1'000'000;

// All distinct elements of word length <= radius, in breadth-first order:
// level by level, each level generated by right-multiplying the previous level
// (in order) by x_1, x_1^-1, x_2, x_2^-1, ... Element 0 is the identity.
class Ball {
 public:
  Ball(GroupPtr group, int radius, std::size_t cap = default_cap);

  const GroupPtr& group() const noexcept { return group_; }
  int radius() const noexcept { return radius_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<Word>& elements() const noexcept { return elements_; }
  const Word& operator[](std::size_t i) const { return elements_[i]; }
  // Word length of element i (its BFS level).
  int length(std::size_t i) const { return lengths_[i]; }
  std::size_t inverse_index(std::size_t i) const { return inverses_[i]; }

  std::optional<std::size_t> index_of(const Word& w) const;
  bool contains(const Word& w) const { return index_of(w).has_value(); }

 private:
  std::optional<std::size_t> lookup(const std::string& key, const Word& w) const;
  void insert(const std::string& key, Word w, int length);

  GroupPtr group_;
  int radius_;
  std::vector<Word> elements_;
  std::vector<int> lengths_;
  std::vector<std::size_t> inverses_;
  std::unordered_map<std::string, std::vector<std::size_t>> buckets_;
};

// Throws cap_exceeded when the ball would hold more than `cap` elements.
Ball enumerate_ball(const GroupPtr& group, int radius, std::size_t cap = default_cap);

}  // namespace ordlat
