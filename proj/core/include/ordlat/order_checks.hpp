#pragma once

// Order-theoretic predicates of a cone, checked exhaustively on a ball.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ordlat/ball.hpp"
#include "ordlat/cone.hpp"

namespace ordlat {

struct ConradianReport {
  int radius = 0;
  int exponent = 2;
  std::size_t pairs_checked = 0;
  // Positive (g, h) in the ball with h * g^exponent <= g.
  std::vector<std::pair<Word, Word>> violations;

  bool conradian_up_to_radius() const noexcept { return violations.empty(); }
};

ConradianReport is_conradian_on_ball(const Cone& cone, int radius, int exponent = 2,
                                     std::size_t cap = default_cap);

struct CofinalEntry {
  Word h;
  // Least n <= bound with g^-n < h < g^n, if any.
  std::optional<int> n;
};

struct CofinalReport {
  // The element tested, replaced by its inverse when it is negative so that
  // g^-n < h < g^n is the meaningful window.
  Word element;
  int radius = 0;
  int bound = 0;
  std::vector<CofinalEntry> entries;

  bool cofinal_up_to() const noexcept;
  std::optional<Word> first_failure() const;
};

CofinalReport is_cofinal_on_ball(const Cone& cone, const Word& g, int radius, int bound,
                                 std::size_t cap = default_cap);

struct AxiomViolation {
  std::string axiom;
  std::vector<Word> elements;
};

struct AxiomReport {
  int radius = 0;
  std::size_t ball_size = 0;
  std::size_t pairs_checked = 0;
  std::size_t triples_checked = 0;
  std::size_t right_triples_checked = 0;
  std::vector<AxiomViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
};

struct AxiomOptions {
  // Left-invariance triples: 0 checks all of them, otherwise this many
  // sampled with `seed`.
  std::size_t samples = 0;
  // Also check right-invariance, on `right_samples` sampled triples (0: all).
  bool bi = false;
  std::size_t right_samples = 0;
  std::uint64_t seed = 1;
  std::size_t cap = default_cap;
  // Stop recording after this many violations.
  std::size_t max_violations = 16;
};

// Antisymmetry (exactly one of g, g^-1 positive), totality and consistency of
// compare on all pairs, left-invariance g < h => fg < fh on triples, and
// optionally right-invariance g < h => gf < hf.
AxiomReport check_order_axioms(const Cone& cone, int radius, const AxiomOptions& options = {});

}  // namespace ordlat
