#include "ordlat/cone_enumeration.hpp"

#include <algorithm>
#include <thread>

#include "ordlat/error.hpp"

namespace ordlat {

BallPtr make_ball(const GroupPtr& group, int radius, std::size_t cap) {
  return std::make_shared<const Ball>(group, radius, cap);
}

FiniteConeAssignment::FiniteConeAssignment(BallPtr ball, std::vector<std::int8_t> signs)
    : ball_(std::move(ball)), signs_(std::move(signs)) {
  if (!ball_ || signs_.size() != ball_->size()) {
    throw Error(ErrorKind::invalid_argument, "assignment does not match its ball");
  }
}

Sign FiniteConeAssignment::sign_at(std::size_t index) const {
  if (index == 0) throw Error(ErrorKind::identity_sign, "the identity has no sign");
  return signs_.at(index) > 0 ? Sign::positive : Sign::negative;
}

Sign FiniteConeAssignment::sign(const Word& w) const {
  auto index = ball_->index_of(w);
  if (!index) {
    throw Error(ErrorKind::outside_domain, "element " + w.str() + " is outside the ball of radius " +
                                               std::to_string(radius()));
  }
  return sign_at(*index);
}

std::vector<Word> FiniteConeAssignment::positive_elements() const {
  std::vector<Word> out;
  for (std::size_t i = 1; i < signs_.size(); ++i) {
    if (signs_[i] > 0) out.push_back((*ball_)[i]);
  }
  return out;
}

std::string FiniteConeAssignment::signature() const {
  std::string out;
  for (std::size_t i = 1; i < signs_.size(); ++i) out += signs_[i] > 0 ? '+' : '-';
  return out;
}

ConePtr FiniteConeAssignment::as_cone() const {
  std::vector<std::pair<Word, Sign>> entries;
  for (std::size_t i = 1; i < signs_.size(); ++i) {
    if (signs_[i] > 0) entries.emplace_back((*ball_)[i], Sign::positive);
  }
  return make_finite_cone(ball_->group(), entries, "ball(" + std::to_string(radius()) + ")");
}

FiniteConeAssignment restrict_cone(const Cone& cone, const BallPtr& ball) {
  if (!cone.group()->same_as(*ball->group())) {
    throw Error(ErrorKind::backend_mismatch, "cone and ball live in different groups");
  }
  std::vector<std::int8_t> signs(ball->size(), 0);
  for (std::size_t i = 1; i < ball->size(); ++i) {
    signs[i] = cone.sign((*ball)[i]) == Sign::positive ? 1 : -1;
  }
  return FiniteConeAssignment(ball, std::move(signs));
}

namespace {

using Index = std::uint32_t;

// For every element e, the pairs (y, z) with e*y*z = 1 and y, z nonidentity
// ball elements: e, y, z may not all be positive.
std::vector<std::vector<std::pair<Index, Index>>> build_triples(const Ball& ball, unsigned threads) {
  const std::size_t n = ball.size();
  std::vector<std::vector<std::pair<Index, Index>>> partners(n);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t g = first; g < n; g += stride) {
      if (g == 0) continue;
      for (std::size_t h = 1; h < n; ++h) {
        if (h == ball.inverse_index(g)) continue;
        auto k = ball.index_of(ball[g] * ball[h]);
        if (!k) continue;
        partners[g].emplace_back(static_cast<Index>(h), static_cast<Index>(ball.inverse_index(*k)));
      }
    }
  };
  threads = std::max(1U, threads);
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  return partners;
}

class Solver {
 public:
  Solver(const BallPtr& ball, const EnumerationOptions& options)
      : ball_(ball), options_(options), value_(ball->size(), 0),
        partners_(build_triples(*ball, options.threads)) {}

  std::vector<FiniteConeAssignment> run(const std::vector<std::size_t>& constraints) {
    bool ok = true;
    for (auto c : constraints) ok = ok && assume(c);
    if (ok) search();
    return std::move(solutions_);
  }

 private:
  // Makes e positive and propagates; false on conflict.
  bool assume(std::size_t e) {
    queue_.clear();
    if (!set_positive(e)) return false;
    while (!queue_.empty()) {
      const std::size_t p = queue_.back();
      queue_.pop_back();
      for (auto [y, z] : partners_[p]) {
        const auto vy = value_[y];
        const auto vz = value_[z];
        if (vy > 0 && vz > 0) return false;
        if (vy > 0 && vz == 0) {
          if (!set_positive(ball_->inverse_index(z))) return false;
        } else if (vz > 0 && vy == 0) {
          if (!set_positive(ball_->inverse_index(y))) return false;
        }
      }
    }
    return true;
  }

  bool set_positive(std::size_t e) {
    if (value_[e] > 0) return true;
    if (value_[e] < 0) return false;
    value_[e] = 1;
    value_[ball_->inverse_index(e)] = -1;
    trail_.push_back(e);
    queue_.push_back(e);
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t e = trail_.back();
      trail_.pop_back();
      value_[e] = 0;
      value_[ball_->inverse_index(e)] = 0;
    }
  }

  bool done() const { return options_.limit != 0 && solutions_.size() >= options_.limit; }

  void search() {
    std::size_t next = 1;
    while (next < value_.size() && value_[next] != 0) ++next;
    if (next == value_.size()) {
      if (solutions_.size() >= options_.cap) {
        throw Error(ErrorKind::cap_exceeded,
                    "more than " + std::to_string(options_.cap) + " consistent assignments");
      }
      solutions_.emplace_back(ball_, value_);
      return;
    }
    for (const std::size_t choice : {next, ball_->inverse_index(next)}) {
      const std::size_t mark = trail_.size();
      if (assume(choice)) search();
      undo(mark);
      if (done()) return;
    }
  }

  BallPtr ball_;
  EnumerationOptions options_;
  std::vector<std::int8_t> value_;
  std::vector<std::vector<std::pair<Index, Index>>> partners_;
  std::vector<std::size_t> trail_;
  std::vector<std::size_t> queue_;
  std::vector<FiniteConeAssignment> solutions_;
};

}  // namespace

std::vector<FiniteConeAssignment> enumerate_finite_cones(const BallPtr& ball,
                                                         const std::vector<Word>& constraints,
                                                         const EnumerationOptions& options) {
  std::vector<std::size_t> indices;
  for (const auto& w : constraints) {
    if (w.is_identity()) throw Error(ErrorKind::identity_sign, "the identity cannot be required positive");
    auto index = ball->index_of(w);
    if (!index) {
      throw Error(ErrorKind::outside_domain, "constraint " + w.str() + " lies outside the ball of radius " +
                                                 std::to_string(ball->radius()));
    }
    indices.push_back(*index);
  }
  return Solver(ball, options).run(indices);
}

std::vector<FiniteConeAssignment> enumerate_finite_cones(const GroupPtr& group, int radius,
                                                         const std::vector<Word>& constraints,
                                                         const EnumerationOptions& options) {
  return enumerate_finite_cones(make_ball(group, radius, options.cap), constraints, options);
}

}  // namespace ordlat
