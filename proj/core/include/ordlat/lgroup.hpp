#pragma once

// The evaluation homomorphism pi_P : F(G) -> Aut(G, <_P). Every term is a
// join of meets of group elements, and pi_P of such a form sends h to
//   max_i min_j (g_ij * h)
// with max and min taken in the total order <_P.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ordlat/ball.hpp"
#include "ordlat/cone.hpp"
#include "ordlat/lo_catalog.hpp"
#include "ordlat/term.hpp"

namespace ordlat {

struct JoinMeetForm {
  GroupPtr group;
  // rows[i][j] = g_ij; the form is  \/_i /\_j g_ij.
  std::vector<std::vector<Word>> rows;

  std::size_t entry_count() const noexcept;
  std::string str() const;
  LTerm to_term() const;
};

struct NormalizeOptions {
  std::size_t max_rows = 10'000;
  std::size_t max_entries = 1'000'000;
};

// Pushes products and inverses down to the leaves and distributes meets over
// joins:
//   g(x \/ y) = gx \/ gy, (x \/ y)h = xh \/ yh (dually for /\),
//   (x \/ y)^-1 = x^-1 /\ y^-1, (x /\ y)^-1 = x^-1 \/ y^-1.
// Duplicate entries within a row and duplicate rows are dropped; nothing else
// is minimised. Throws cap_exceeded past the row or entry limits.
JoinMeetForm normalize(const LTerm& term, const NormalizeOptions& options = {});

struct EvalResult {
  Word point;
  Word output;
  // Witnessing row (argmax) and entry (argmin) for join-of-meets forms.
  std::optional<std::size_t> row;
  std::optional<std::size_t> col;
};

EvalResult evaluate(const Cone& cone, const JoinMeetForm& form, const Word& h);
// Evaluates the tree directly: products compose, joins and meets take max and
// min pointwise, and inverses are pushed inward by De Morgan. No witness.
EvalResult evaluate(const Cone& cone, const LTerm& term, const Word& h);

struct KernelVerdict {
  enum class Kind { trivial_up_to, proof_nontrivial };
  Kind kind = Kind::trivial_up_to;
  int radius = 0;
  std::string cone;
  // Set for proof_nontrivial: the first moved point in ball order and its image.
  std::optional<Word> moved;
  std::optional<Word> image;

  bool trivial() const noexcept { return kind == Kind::trivial_up_to; }
};

// One-sided kernel test: a moved point proves t is not in ker(pi_P); fixing
// every point of ball(r) is only evidence.
KernelVerdict acts_trivially_on_ball(const Cone& cone, const JoinMeetForm& form, int radius,
                                     std::size_t cap = default_cap);
KernelVerdict acts_trivially_on_ball(const Cone& cone, const LTerm& term, int radius,
                                     std::size_t cap = default_cap);

struct NontrivialityWitness {
  std::size_t cone_index = 0;
  ConePtr cone;
  Word point;
  Word image;
};

// Searches the cones (in order) and the points of ball(r) for a moved point.
// Finding none is inconclusive.
std::optional<NontrivialityWitness> nontriviality_witness(const LTerm& term,
                                                          const std::vector<ConePtr>& cones,
                                                          int radius, std::size_t cap = default_cap);

struct BasicVerdict {
  enum class Kind { basic, not_basic, not_positive };
  Kind kind = Kind::not_basic;
  // Indices into the LO space of cones with pi_P(t)(1) > 1 and < 1.
  std::vector<std::size_t> raising;
  std::vector<std::size_t> lowering;
};

// Over a complete finite LO(G): t is basic iff pi_P(t)(1) >= 1 for every P
// with strict inequality for exactly one P.
BasicVerdict basic_element_check(const LTerm& term, const FiniteLoSpace& space);

std::string_view to_string(BasicVerdict::Kind kind);

}  // namespace ordlat
