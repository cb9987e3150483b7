#pragma once

// Consistent sign assignments on a ball: the finite-radius picture of LO(G).
// An assignment at radius r need not extend to a positive cone of the group.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "ordlat/ball.hpp"
#include "ordlat/cone.hpp"

namespace ordlat {

using BallPtr = std::shared_ptr<const Ball>;

BallPtr make_ball(const GroupPtr& group, int radius, std::size_t cap = default_cap);

class FiniteConeAssignment {
 public:
  // signs[i] is +1/-1 for every nonidentity ball element and 0 at the identity.
  FiniteConeAssignment(BallPtr ball, std::vector<std::int8_t> signs);

  const Ball& ball() const noexcept { return *ball_; }
  const BallPtr& ball_ptr() const noexcept { return ball_; }
  int radius() const noexcept { return ball_->radius(); }

  Sign sign_at(std::size_t index) const;
  // Throws outside_domain if w is not in the ball.
  Sign sign(const Word& w) const;
  std::vector<Word> positive_elements() const;
  // One character per nonidentity element, in ball order.
  std::string signature() const;
  const std::vector<std::int8_t>& raw() const noexcept { return signs_; }

  // The assignment viewed as a cone defined on the ball only.
  ConePtr as_cone() const;

  friend bool operator==(const FiniteConeAssignment& a, const FiniteConeAssignment& b) {
    return a.signs_ == b.signs_;
  }

 private:
  BallPtr ball_;
  std::vector<std::int8_t> signs_;
};

// Restriction of a cone to a ball.
FiniteConeAssignment restrict_cone(const Cone& cone, const BallPtr& ball);

struct EnumerationOptions {
  // Fail with cap_exceeded beyond this many assignments (or ball elements).
  std::size_t cap = default_cap;
  // Stop after this many assignments; 0 means enumerate everything.
  std::size_t limit = 0;
  unsigned threads = 1;
};

// Every sign map on ball \ {1} that is antisymmetric under inversion, closed
// under products that stay inside the ball, and makes every constraint
// positive. Backtracking with unit propagation; + is tried before - on the
// first undecided element in ball order, so the output order is canonical.
std::vector<FiniteConeAssignment> enumerate_finite_cones(const BallPtr& ball,
                                                         const std::vector<Word>& constraints,
                                                         const EnumerationOptions& options = {});

std::vector<FiniteConeAssignment> enumerate_finite_cones(const GroupPtr& group, int radius,
                                                         const std::vector<Word>& constraints,
                                                         const EnumerationOptions& options = {});

}  // namespace ordlat
