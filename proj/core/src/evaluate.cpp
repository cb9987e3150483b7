#include "ordlat/error.hpp"
#include "ordlat/lgroup.hpp"

namespace ordlat {

namespace {

void check_backend(const Cone& cone, const GroupPtr& group, const Word& h) {
  if (!cone.group()->same_as(*group)) {
    throw Error(ErrorKind::backend_mismatch,
                "cone on " + cone.group()->spec() + " cannot evaluate a term over " + group->spec());
  }
  cone.group()->check_member(h);
}

// pi_P(t)(h), or pi_P(t^-1)(h) when `inverted` is set.
Word eval_tree(const Cone& cone, const LTerm& t, const Word& h, bool inverted) {
  switch (t.kind()) {
    case TermKind::element: return inverted ? t.word().inverse() * h : t.word() * h;
    case TermKind::inv: return eval_tree(cone, t.left(), h, !inverted);
    case TermKind::mul:
      if (inverted) {
        return eval_tree(cone, t.right(), eval_tree(cone, t.left(), h, true), true);
      }
      return eval_tree(cone, t.left(), eval_tree(cone, t.right(), h, false), false);
    case TermKind::join:
    case TermKind::meet: {
      Word x = eval_tree(cone, t.left(), h, inverted);
      Word y = eval_tree(cone, t.right(), h, inverted);
      const bool take_max = (t.kind() == TermKind::join) != inverted;
      const Order o = cone.compare(x, y);
      if (o == Order::equal) return x;
      return (o == Order::less) == take_max ? y : x;
    }
  }
  throw Error(ErrorKind::internal, "unknown term kind");
}

}  // namespace

EvalResult evaluate(const Cone& cone, const JoinMeetForm& form, const Word& h) {
  check_backend(cone, form.group, h);
  if (form.rows.empty()) throw Error(ErrorKind::invalid_argument, "empty join-meet form");
  std::optional<Word> best;
  std::size_t best_row = 0;
  std::size_t best_col = 0;
  for (std::size_t i = 0; i < form.rows.size(); ++i) {
    const auto& row = form.rows[i];
    if (row.empty()) throw Error(ErrorKind::invalid_argument, "empty row in join-meet form");
    Word low = row[0] * h;
    std::size_t low_col = 0;
    for (std::size_t j = 1; j < row.size(); ++j) {
      Word candidate = row[j] * h;
      if (cone.less(candidate, low)) {
        low = std::move(candidate);
        low_col = j;
      }
    }
    if (!best || cone.less(*best, low)) {
      best = std::move(low);
      best_row = i;
      best_col = low_col;
    }
  }
  return EvalResult{h, *best, best_row, best_col};
}

EvalResult evaluate(const Cone& cone, const LTerm& term, const Word& h) {
  check_backend(cone, term.group(), h);
  return EvalResult{h, eval_tree(cone, term, h, false), std::nullopt, std::nullopt};
}

namespace {

template <typename T>
KernelVerdict kernel_scan(const Cone& cone, const T& t, int radius, std::size_t cap) {
  const Ball ball(cone.group(), radius, cap);
  KernelVerdict verdict;
  verdict.radius = radius;
  verdict.cone = cone.spec();
  for (const auto& h : ball.elements()) {
    Word image = evaluate(cone, t, h).output;
    if (!(image == h)) {
      verdict.kind = KernelVerdict::Kind::proof_nontrivial;
      verdict.moved = h;
      verdict.image = std::move(image);
      return verdict;
    }
  }
  return verdict;
}

}  // namespace

KernelVerdict acts_trivially_on_ball(const Cone& cone, const JoinMeetForm& form, int radius,
                                     std::size_t cap) {
  return kernel_scan(cone, form, radius, cap);
}

KernelVerdict acts_trivially_on_ball(const Cone& cone, const LTerm& term, int radius,
                                     std::size_t cap) {
  return kernel_scan(cone, term, radius, cap);
}

std::optional<NontrivialityWitness> nontriviality_witness(const LTerm& term,
                                                          const std::vector<ConePtr>& cones,
                                                          int radius, std::size_t cap) {
  const JoinMeetForm form = normalize(term);
  for (std::size_t k = 0; k < cones.size(); ++k) {
    const KernelVerdict v = kernel_scan(*cones[k], form, radius, cap);
    if (!v.trivial()) return NontrivialityWitness{k, cones[k], *v.moved, *v.image};
  }
  return std::nullopt;
}

BasicVerdict basic_element_check(const LTerm& term, const FiniteLoSpace& space) {
  space.require_complete("basic-element check");
  const JoinMeetForm form = normalize(term);
  const Word one = space.group()->identity();
  BasicVerdict verdict;
  for (std::size_t k = 0; k < space.size(); ++k) {
    const Word out = evaluate(*space.cones()[k], form, one).output;
    if (out.is_identity()) continue;
    if (space.cones()[k]->is_positive(out)) {
      verdict.raising.push_back(k);
    } else {
      verdict.lowering.push_back(k);
    }
  }
  if (!verdict.lowering.empty()) {
    verdict.kind = BasicVerdict::Kind::not_positive;
  } else {
    verdict.kind = verdict.raising.size() == 1 ? BasicVerdict::Kind::basic : BasicVerdict::Kind::not_basic;
  }
  return verdict;
}

std::string_view to_string(BasicVerdict::Kind kind) {
  switch (kind) {
    case BasicVerdict::Kind::basic: return "basic";
    case BasicVerdict::Kind::not_basic: return "not-basic";
    case BasicVerdict::Kind::not_positive: return "not-positive";
  }
  return "?";
}

}  // namespace ordlat
