#pragma once

// LO(G) at finite resolution: basic open sets, isolation scans, conjugation
// orbits and the obstructions that keep a cone out of an orbit closure.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordlat/certificate.hpp"
#include "ordlat/cone_enumeration.hpp"
#include "ordlat/lgroup.hpp"
#include "ordlat/lo_catalog.hpp"
#include "ordlat/order_checks.hpp"

namespace ordlat {

// The open set U_{g_1} cap ... cap U_{g_n}: cones containing every g_i.
struct OpenSetSpec {
  std::vector<Word> elements;

  // Comma-separated words, e.g. "x1,x2".
  static OpenSetSpec parse(const GroupPtr& group, std::string_view text);
  std::string str() const;
  // Throws on identity entries or mixed backends.
  void validate(const GroupPtr& group) const;
};

std::vector<FiniteConeAssignment> cones_in_open_set(const GroupPtr& group, const OpenSetSpec& spec,
                                                    int radius,
                                                    const EnumerationOptions& options = {});

struct IsolationScan {
  enum class Outcome { certified, refuted, empty };
  Outcome outcome = Outcome::certified;
  std::vector<int> radii;
  // Extensions found per radius, counting at most two.
  std::vector<std::size_t> counts;
  std::optional<Certificate> certificate;
  // For a refutation: the radius and two distinct extensions there.
  std::optional<int> refuting_radius;
  std::vector<FiniteConeAssignment> witnesses;
};

std::string_view to_string(IsolationScan::Outcome outcome);

IsolationScan isolated_scan(const GroupPtr& group, const OpenSetSpec& spec,
                            const std::vector<int>& radii, const EnumerationOptions& options = {});

struct OrbitPoint {
  // Shortest conjugator (first in ball order) realising the restriction.
  Word conjugator;
  FiniteConeAssignment restriction;
};

struct OrbitReport {
  std::string base;
  int conj_radius = 0;
  int radius = 0;
  std::vector<OrbitPoint> points;
};

// Distinct restrictions to ball(r) of f P f^-1 for f in ball(s).
OrbitReport orbit_points(const ConePtr& cone, int conj_radius, int radius,
                         std::size_t cap = default_cap);

struct OrbitSearch {
  std::optional<Word> conjugator;
  std::optional<Certificate> certificate;
  int conj_radius = 0;
  int radius = 0;
  bool found() const noexcept { return conjugator.has_value(); }
};

// Looks for f in ball(s) with f P f^-1 agreeing with Q on ball(r).
OrbitSearch orbit_closure_contains(const ConePtr& target, const ConePtr& base, int radius,
                                   int conj_radius, std::size_t cap = default_cap);

// Whether g is on the built-in list of structurally cofinal elements: the
// central Delta_n^{+-2} of a braid group, or a generator (or its inverse) of an
// infinite cyclic backend.
bool is_known_cofinal(const Word& g);

struct ObstructionResult {
  CofinalReport report;
  std::optional<Certificate> certificate;
  // Why no certificate was issued, when none was.
  std::string reason;
};

// Prop: if g is cofinal for P then rev(P) is not in the orbit closure of P.
// The finite cofinality check must pass and g must be known-cofinal, or
// assumed so (which taints the certificate).
ObstructionResult cofinal_obstruction(const ConePtr& cone, const Word& g, int radius, int bound,
                                      bool assume_cofinal = false, std::size_t cap = default_cap);

struct FalsifierResult {
  // Index into the term family of the first falsifying term.
  std::size_t term_index = 0;
  LTerm term;
  KernelVerdict under_base;
  KernelVerdict under_target;
  // Present when the base-side triviality is exact, not just up to radius.
  std::optional<Certificate> certificate;
};

// Searches for t trivial on ball(r) under P and moving a point under Q.
std::optional<FalsifierResult> kernel_containment_falsifier(const ConePtr& base,
                                                            const ConePtr& target,
                                                            const std::vector<LTerm>& terms,
                                                            int radius,
                                                            bool assume_cofinal = false,
                                                            std::size_t cap = default_cap);

// g with g P_{eps1} g^-1 and P_{eps2} agreeing on <x_1..x_n>: the product of
// x_{i+1} over the entries i <= n where the sequences differ, lowest first.
// Throws invalid_argument when a needed x_{i+1} exceeds the rank.
Word tararin_conjugator(const GroupPtr& group, const SignSequence& from, const SignSequence& to,
                        int n);

// Sign mismatches between g P_from g^-1 and P_to on ball(radius) of the
// subgroup <x_1..x_n>.
std::size_t tararin_conjugator_mismatches(const GroupPtr& group, const SignSequence& from,
                                          const SignSequence& to, int n, const Word& g,
                                          int radius = 3);

struct InvariantSetReport {
  // Partition of the LO space into conjugation orbits (indices into it).
  std::vector<std::vector<std::size_t>> orbits;
  int conj_radius = 0;
  // Every member's orbit, computed on its own, equals its block.
  bool verified = false;
};

InvariantSetReport minimal_invariant_sets(const FiniteLoSpace& space, int conj_radius,
                                          std::size_t cap = default_cap);

struct FiniteSpaceReport {
  std::size_t size = 0;
  // Every point of a finite space is isolated; the witness open set for cone
  // k is the set of its positive generators.
  std::vector<OpenSetSpec> isolating_sets;
};

FiniteSpaceReport finite_or_uncountable_check(const FiniteLoSpace& space);

// Basic-element certificate for t over a complete finite LO space, if t is basic.
std::optional<Certificate> basic_element_certificate(const LTerm& term, const FiniteLoSpace& space);

}  // namespace ordlat
