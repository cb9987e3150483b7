#include "ordlat/ball.hpp"

#include "ordlat/error.hpp"

namespace ordlat {

Ball::Ball(GroupPtr group, int radius, std::size_t cap)
    : group_(std::move(group)), radius_(radius) {
  if (!group_) throw Error(ErrorKind::invalid_argument, "ball needs a group");
  if (radius < 0) throw Error(ErrorKind::invalid_argument, "ball radius must be >= 0");

  std::vector<Word> letters;
  for (int g = 1; g <= group_->rank(); ++g) {
    letters.push_back(group_->generator(g, 1));
    letters.push_back(group_->generator(g, -1));
  }

  Word one = group_->identity();
  insert(group_->bucket_key(one), one, 0);
  std::size_t level_begin = 0;
  for (int level = 1; level <= radius; ++level) {
    const std::size_t level_end = elements_.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const auto& letter : letters) {
        Word next = elements_[i] * letter;
        std::string key = group_->bucket_key(next);
        if (lookup(key, next)) continue;
        if (elements_.size() >= cap) {
          throw Error(ErrorKind::cap_exceeded, "ball of radius " + std::to_string(radius) +
                                                   " in " + group_->spec() +
                                                   " exceeds the element cap " +
                                                   std::to_string(cap));
        }
        insert(key, std::move(next), level);
      }
    }
    level_begin = level_end;
  }

  inverses_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    auto j = index_of(elements_[i].inverse());
    if (!j) throw Error(ErrorKind::internal, "ball not closed under inversion");
    inverses_[i] = *j;
  }
}

std::optional<std::size_t> Ball::lookup(const std::string& key, const Word& w) const {
  auto it = buckets_.find(key);
  if (it == buckets_.end()) return std::nullopt;
  for (std::size_t i : it->second) {
    if (group_->equal(elements_[i], w)) return i;
  }
  return std::nullopt;
}

void Ball::insert(const std::string& key, Word w, int length) {
  buckets_[key].push_back(elements_.size());
  elements_.push_back(std::move(w));
  lengths_.push_back(length);
}

std::optional<std::size_t> Ball::index_of(const Word& w) const {
  group_->check_member(w);
  return lookup(group_->bucket_key(w), w);
}

Ball enumerate_ball(const GroupPtr& group, int radius, std::size_t cap) {
  return Ball(group, radius, cap);
}

}  // namespace ordlat
