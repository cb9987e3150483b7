#include "ordlat/lo_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "ordlat/backends.hpp"
#include "ordlat/error.hpp"

namespace ordlat {

OpenSetSpec OpenSetSpec::parse(const GroupPtr& group, std::string_view text) {
  OpenSetSpec spec;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    std::string_view item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw Error(ErrorKind::invalid_argument, "empty entry in open set '" + std::string(text) + "'");
    spec.elements.push_back(group->parse_word(item));
    start = comma + 1;
  }
  spec.validate(group);
  return spec;
}

std::string OpenSetSpec::str() const {
  std::string out;
  for (const auto& g : elements) {
    if (!out.empty()) out += ',';
    out += g.str();
  }
  return out;
}

void OpenSetSpec::validate(const GroupPtr& group) const {
  for (const auto& g : elements) {
    group->check_member(g);
    if (g.is_identity()) {
      throw Error(ErrorKind::identity_sign, "the identity cannot define an open set U_g");
    }
  }
}

std::vector<FiniteConeAssignment> cones_in_open_set(const GroupPtr& group, const OpenSetSpec& spec,
                                                    int radius, const EnumerationOptions& options) {
  spec.validate(group);
  return enumerate_finite_cones(group, radius, spec.elements, options);
}

std::string_view to_string(IsolationScan::Outcome outcome) {
  switch (outcome) {
    case IsolationScan::Outcome::certified: return "certified";
    case IsolationScan::Outcome::refuted: return "refuted";
    case IsolationScan::Outcome::empty: return "empty";
  }
  return "?";
}

namespace {

std::string join_ints(const auto& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

}  // namespace

IsolationScan isolated_scan(const GroupPtr& group, const OpenSetSpec& spec,
                            const std::vector<int>& radii, const EnumerationOptions& options) {
  if (radii.empty()) throw Error(ErrorKind::invalid_argument, "isolation scan needs at least one radius");
  spec.validate(group);
  EnumerationOptions limited = options;
  limited.limit = 2;
  IsolationScan scan;
  for (int r : radii) {
    auto found = enumerate_finite_cones(group, r, spec.elements, limited);
    scan.radii.push_back(r);
    scan.counts.push_back(found.size());
    if (found.empty()) {
      scan.outcome = IsolationScan::Outcome::empty;
      return scan;
    }
    if (found.size() > 1) {
      scan.outcome = IsolationScan::Outcome::refuted;
      scan.refuting_radius = r;
      scan.witnesses = std::move(found);
      return scan;
    }
  }
  Certificate cert;
  cert.kind = Certificate::Kind::isolation_up_to_radius;
  cert.statement = "exactly one consistent sign assignment on ball(r) makes {" + spec.str() +
                   "} positive, for r in {" + join_ints(radii) + "}";
  cert.set("group", group->spec());
  cert.set("open_set", spec.str());
  cert.set("radii", join_ints(radii));
  cert.set("counts", join_ints(scan.counts));
  scan.certificate = std::move(cert);
  return scan;
}

OrbitReport orbit_points(const ConePtr& cone, int conj_radius, int radius, std::size_t cap) {
  const Ball conjugators(cone->group(), conj_radius, cap);
  const BallPtr ball = make_ball(cone->group(), radius, cap);
  OrbitReport report;
  report.base = cone->spec();
  report.conj_radius = conj_radius;
  report.radius = radius;
  std::set<std::string> seen;
  for (const auto& f : conjugators.elements()) {
    FiniteConeAssignment restriction = restrict_cone(*conjugate_cone(cone, f), ball);
    if (seen.insert(restriction.signature()).second) {
      report.points.push_back(OrbitPoint{f, std::move(restriction)});
    }
  }
  return report;
}

namespace {

void require_same_group(const Cone& a, const Cone& b) {
  if (!a.group()->same_as(*b.group())) {
    throw Error(ErrorKind::backend_mismatch,
                "cones live on " + a.group()->spec() + " and " + b.group()->spec());
  }
}

}  // namespace

OrbitSearch orbit_closure_contains(const ConePtr& target, const ConePtr& base, int radius,
                                   int conj_radius, std::size_t cap) {
  require_same_group(*target, *base);
  const Ball conjugators(base->group(), conj_radius, cap);
  const BallPtr ball = make_ball(base->group(), radius, cap);
  const FiniteConeAssignment wanted = restrict_cone(*target, ball);
  OrbitSearch search;
  search.conj_radius = conj_radius;
  search.radius = radius;
  for (const auto& f : conjugators.elements()) {
    if (!(restrict_cone(*conjugate_cone(base, f), ball) == wanted)) continue;
    search.conjugator = f;
    Certificate cert;
    cert.kind = Certificate::Kind::orbit_membership_witness;
    cert.statement = "f P f^-1 and Q agree on ball(" + std::to_string(radius) + ") for f = " + f.str();
    cert.set("group", base->group()->spec());
    cert.set("base", base->spec());
    cert.set("target", target->spec());
    cert.set("conjugator", f.str());
    cert.set("radius", std::to_string(radius));
    search.certificate = std::move(cert);
    return search;
  }
  return search;
}

bool is_known_cofinal(const Word& g) {
  const GroupPtr& group = g.group();
  if (!group || g.is_identity()) return false;
  if (group->family() == Family::braid) {
    const Word square = braid::garside_half_twist(group).pow(2);
    if (g == square || g == square.inverse()) return true;
  }
  if (group->rank() == 1) {
    const Word x = group->generator(1);
    return g == x || g == x.inverse();
  }
  return false;
}

namespace {

LTerm meet_with_one(const Word& g) {
  return LTerm::meet(LTerm::element(g), LTerm::element(g.group()->identity()));
}

}  // namespace

ObstructionResult cofinal_obstruction(const ConePtr& cone, const Word& g, int radius, int bound,
                                      bool assume_cofinal, std::size_t cap) {
  ObstructionResult result{is_cofinal_on_ball(*cone, g, radius, bound, cap), std::nullopt, {}};
  const Word& positive = result.report.element;
  if (!result.report.cofinal_up_to()) {
    result.reason = "cofinality check failed at h = " + result.report.first_failure()->str();
    return result;
  }
  const bool known = is_known_cofinal(positive);
  if (!known && !assume_cofinal) {
    result.reason = positive.str() + " is not known to be cofinal; pass --assume-cofinal to assume it";
    return result;
  }
  const ConePtr reversed = reverse_cone(cone);
  const LTerm term = meet_with_one(positive);
  const Word one = cone->group()->identity();
  const Word moved = evaluate(*reversed, term, one).output;
  if (moved == one) {
    throw Error(ErrorKind::internal, "g /\\ 1 fixes 1 under the reversed cone");
  }
  Certificate cert;
  cert.kind = Certificate::Kind::cofinality_obstruction;
  cert.tainted = !known;
  cert.statement = "rev(P) is not in the orbit closure of P: " + term.str() +
                   " lies in ker(pi_P) but moves 1 under rev(P)";
  cert.set("group", cone->group()->spec());
  cert.set("cone", cone->spec());
  cert.set("target", reversed->spec());
  cert.set("element", positive.str());
  cert.set("term", term.str());
  cert.set("point", one.str());
  cert.set("image", moved.str());
  cert.set("radius", std::to_string(radius));
  cert.set("bound", std::to_string(bound));
  cert.set("cofinality", known ? "known" : "assumed");
  result.certificate = std::move(cert);
  return result;
}

namespace {

// g when the term is g /\ 1 or 1 /\ g.
std::optional<Word> meet_one_element(const LTerm& t) {
  if (t.kind() != TermKind::meet) return std::nullopt;
  const LTerm& l = t.left();
  const LTerm& r = t.right();
  if (l.kind() != TermKind::element || r.kind() != TermKind::element) return std::nullopt;
  if (r.word().is_identity() && !l.word().is_identity()) return l.word();
  if (l.word().is_identity() && !r.word().is_identity()) return r.word();
  return std::nullopt;
}

}  // namespace

std::optional<FalsifierResult> kernel_containment_falsifier(const ConePtr& base,
                                                            const ConePtr& target,
                                                            const std::vector<LTerm>& terms,
                                                            int radius, bool assume_cofinal,
                                                            std::size_t cap) {
  require_same_group(*base, *target);
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const LTerm& t = terms[k];
    KernelVerdict on_base = acts_trivially_on_ball(*base, t, radius, cap);
    if (!on_base.trivial()) continue;
    KernelVerdict on_target = acts_trivially_on_ball(*target, t, radius, cap);
    if (on_target.trivial()) continue;
    FalsifierResult result{k, t, on_base, on_target, std::nullopt};

    // g /\ 1 with g positive and cofinal for P lies in ker(pi_P) exactly.
    const auto g = meet_one_element(t);
    if (!g || !base->is_positive(*g)) return result;
    const bool known = is_known_cofinal(*g);
    if (!known && !assume_cofinal) return result;
    const int bound = radius + 1;
    const CofinalReport report = is_cofinal_on_ball(*base, *g, radius, bound, cap);
    if (!report.cofinal_up_to()) return result;

    Certificate cert;
    cert.kind = Certificate::Kind::cofinality_obstruction;
    cert.tainted = !known;
    cert.statement = "Q is not in the orbit closure of P: " + t.str() +
                     " lies in ker(pi_P) but moves " + on_target.moved->str() + " under Q";
    cert.set("group", base->group()->spec());
    cert.set("cone", base->spec());
    cert.set("target", target->spec());
    cert.set("element", g->str());
    cert.set("term", t.str());
    cert.set("point", on_target.moved->str());
    cert.set("image", on_target.image->str());
    cert.set("radius", std::to_string(radius));
    cert.set("bound", std::to_string(bound));
    cert.set("cofinality", known ? "known" : "assumed");
    result.certificate = std::move(cert);
    return result;
  }
  return std::nullopt;
}

namespace {

void require_tararin(const GroupPtr& group) {
  if (!group || group->family() != Family::tararin) {
    throw Error(ErrorKind::wrong_backend, "this operation needs a tararin backend");
  }
}

}  // namespace

Word tararin_conjugator(const GroupPtr& group, const SignSequence& from, const SignSequence& to,
                        int n) {
  require_tararin(group);
  if (n < 1) throw Error(ErrorKind::invalid_argument, "n must be >= 1");
  const auto len = static_cast<std::size_t>(n);
  const SignSequence a = from.padded(len);
  const SignSequence b = to.padded(len);
  Word g = group->identity();
  for (int i = 1; i <= n; ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    if (a[k] == b[k]) continue;
    if (i + 1 > group->rank()) {
      throw Error(ErrorKind::invalid_argument,
                  "flipping entry " + std::to_string(i) + " needs x" + std::to_string(i + 1) +
                      ", beyond the rank of " + group->spec());
    }
    // The newest flip is the outermost conjugation.
    g = group->generator(i + 1) * g;
  }
  return g;
}

std::size_t tararin_conjugator_mismatches(const GroupPtr& group, const SignSequence& from,
                                          const SignSequence& to, int n, const Word& g,
                                          int radius) {
  require_tararin(group);
  if (n < 1 || n > group->rank()) {
    throw Error(ErrorKind::invalid_argument, "subgroup index n out of range for " + group->spec());
  }
  const ConePtr moved = conjugate_cone(make_tararin_cone(group, from), g);
  const ConePtr wanted = make_tararin_cone(group, to);
  const Ball sub(make_tararin_group(n), radius);
  std::size_t mismatches = 0;
  for (std::size_t i = 1; i < sub.size(); ++i) {
    const Word w = group->normal_form(sub[i].syllables());
    if (moved->sign(w) != wanted->sign(w)) ++mismatches;
  }
  return mismatches;
}

InvariantSetReport minimal_invariant_sets(const FiniteLoSpace& space, int conj_radius,
                                          std::size_t cap) {
  space.require_complete("minimal invariant sets");
  const GroupPtr& group = space.group();
  // Generator signs already separate the cones of every supported space;
  // radius 2 leaves some slack.
  const BallPtr ball = make_ball(group, 2, cap);
  std::map<std::string, std::size_t> index_of;
  for (std::size_t k = 0; k < space.size(); ++k) {
    if (!index_of.emplace(restrict_cone(*space.cones()[k], ball).signature(), k).second) {
      throw Error(ErrorKind::internal, "two cones of the LO space agree on ball(2)");
    }
  }
  const Ball conjugators(group, conj_radius, cap);
  std::vector<std::set<std::size_t>> orbit(space.size());
  for (std::size_t k = 0; k < space.size(); ++k) {
    for (const auto& f : conjugators.elements()) {
      const auto sig = restrict_cone(*conjugate_cone(space.cones()[k], f), ball).signature();
      auto it = index_of.find(sig);
      if (it == index_of.end()) {
        throw Error(ErrorKind::internal, "a conjugate cone is missing from the LO space");
      }
      orbit[k].insert(it->second);
    }
  }

  std::vector<std::size_t> parent(space.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t k = 0; k < space.size(); ++k) {
    for (std::size_t j : orbit[k]) {
      const std::size_t a = find(k);
      const std::size_t b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }

  InvariantSetReport report;
  report.conj_radius = conj_radius;
  std::map<std::size_t, std::size_t> block_of_root;
  for (std::size_t k = 0; k < space.size(); ++k) {
    auto [it, fresh] = block_of_root.emplace(find(k), report.orbits.size());
    if (fresh) report.orbits.emplace_back();
    report.orbits[it->second].push_back(k);
  }
  report.verified = true;
  for (const auto& block : report.orbits) {
    const std::set<std::size_t> members(block.begin(), block.end());
    for (std::size_t k : block) {
      if (orbit[k] != members) report.verified = false;
    }
  }
  return report;
}

FiniteSpaceReport finite_or_uncountable_check(const FiniteLoSpace& space) {
  space.require_complete("finite-or-uncountable check");
  FiniteSpaceReport report;
  report.size = space.size();
  const GroupPtr& group = space.group();
  for (const auto& cone : space.cones()) {
    OpenSetSpec spec;
    for (int i = 1; i <= group->rank(); ++i) {
      const Word x = group->generator(i);
      spec.elements.push_back(cone->is_positive(x) ? x : x.inverse());
    }
    report.isolating_sets.push_back(std::move(spec));
  }
  return report;
}

std::optional<Certificate> basic_element_certificate(const LTerm& term, const FiniteLoSpace& space) {
  const BasicVerdict verdict = basic_element_check(term, space);
  if (verdict.kind != BasicVerdict::Kind::basic) return std::nullopt;
  const ConePtr& unique = space.cones()[verdict.raising.front()];
  Certificate cert;
  cert.kind = Certificate::Kind::basic_element;
  cert.statement = term.str() + " is a basic element: pi_P(t)(1) >= 1 for all " +
                   std::to_string(space.size()) + " cones, with strict inequality only for " +
                   unique->spec();
  cert.set("group", space.group()->spec());
  cert.set("term", term.str());
  cert.set("cone", unique->spec());
  cert.set("space_size", std::to_string(space.size()));
  return cert;
}

}  // namespace ordlat
