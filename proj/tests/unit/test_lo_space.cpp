#include <gtest/gtest.h>

#include <random>
#include <set>

#include "../oracles/oracles.hpp"
#include "ordlat/backends.hpp"
#include "ordlat/error.hpp"
#include "ordlat/lo_space.hpp"

using namespace ordlat;

TEST(OpenSet, Examples) {
  auto z = make_zn_group(1);
  EXPECT_EQ(cones_in_open_set(z, OpenSetSpec::parse(z, "a"), 3).size(), 1U);
  auto t2 = make_tararin_group(2);
  EXPECT_EQ(cones_in_open_set(t2, OpenSetSpec::parse(t2, "x1,x2"), 4).size(), 1U);
  auto f = make_free_group(2);
  for (int r = 1; r <= 3; ++r) EXPECT_TRUE(cones_in_open_set(f, OpenSetSpec::parse(f, "a, a^-1"), r).empty());
  EXPECT_THROW(OpenSetSpec::parse(f, "a,1"), Error);
  EXPECT_THROW(OpenSetSpec::parse(f, "a,,b"), Error);
}

TEST(OpenSet, EveryAssignmentContainsTheSpec) {
  auto b = make_braid_group(3);
  const auto spec = OpenSetSpec::parse(b, "s1*s2^-1,s2");
  for (const auto& a : cones_in_open_set(b, spec, 2)) {
    for (const auto& g : spec.elements) EXPECT_EQ(a.sign(g), Sign::positive);
  }
}

TEST(Isolation, Examples) {
  const std::vector<int> radii{1, 2, 3, 4, 5};
  auto z = make_zn_group(1);
  auto s1 = isolated_scan(z, OpenSetSpec::parse(z, "a"), radii);
  EXPECT_EQ(s1.outcome, IsolationScan::Outcome::certified);
  ASSERT_TRUE(s1.certificate.has_value());
  EXPECT_EQ(s1.certificate->kind, Certificate::Kind::isolation_up_to_radius);

  auto t2 = make_tararin_group(2);
  EXPECT_EQ(isolated_scan(t2, OpenSetSpec::parse(t2, "x1,x2"), radii).outcome, IsolationScan::Outcome::certified);

  auto f = make_free_group(2);
  auto s3 = isolated_scan(f, OpenSetSpec::parse(f, "a,b"), {1, 2, 3});
  EXPECT_EQ(s3.outcome, IsolationScan::Outcome::refuted);
  ASSERT_EQ(s3.witnesses.size(), 2U);
  EXPECT_FALSE(s3.witnesses[0] == s3.witnesses[1]);
  EXPECT_LE(*s3.refuting_radius, 3);

  EXPECT_EQ(isolated_scan(f, OpenSetSpec::parse(f, "a,a^-1"), {1}).outcome, IsolationScan::Outcome::empty);
}

namespace {

// Number of distinct restrictions of conjugates of P_eps on ball(r), from the
// affine model: sign of f^-1 g f computed by composing affine maps.
std::size_t oracle_tararin_orbit(int n, const std::vector<int>& eps, int s, int r) {
  auto g = make_tararin_group(n);
  const Ball conj(g, s);
  const Ball ball(g, r);
  std::set<std::string> seen;
  for (const auto& f : conj.elements()) {
    const auto af = oracle::tararin_affine(f, n);
    const auto afi = oracle::tararin_affine(f.inverse(), n);
    std::string sig;
    for (std::size_t k = 1; k < ball.size(); ++k) {
      const auto m = afi.compose(oracle::tararin_affine(ball[k], n)).compose(af);
      const auto a = oracle::tararin_exponents(m);
      int sign = 0;
      for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != 0) {
          sign = (a[i] > 0 ? 1 : -1) * eps[i];
          break;
        }
      }
      sig += sign > 0 ? '+' : '-';
    }
    seen.insert(sig);
  }
  return seen.size();
}

}  // namespace

TEST(Orbit, Examples) {
  auto z = make_zn_group(2);
  EXPECT_EQ(orbit_points(make_lex_cone(z, {2, 1}, {Sign::negative, Sign::positive}), 3, 2).points.size(), 1U);

  // Conjugation inside T_2 never changes the sign of x2 (the exponent sum of
  // x2 is a homomorphism to Z), so the orbit of P_{(+,+)} has 2 points.
  auto t2 = make_tararin_group(2);
  const auto rep = orbit_points(make_tararin_cone(t2, SignSequence::parse("+,+")), 2, 3);
  EXPECT_EQ(rep.points.size(), oracle_tararin_orbit(2, {1, 1}, 2, 3));
  EXPECT_EQ(rep.points.size(), 2U);
  EXPECT_TRUE(rep.points[0].conjugator.is_identity());

  auto b = make_braid_group(3);
  EXPECT_GE(orbit_points(make_dehornoy_cone(b), 1, 2).points.size(), 2U);
}

TEST(Orbit, TararinOrbitSizesMatchOracle) {
  for (int n = 1; n <= 3; ++n) {
    std::vector<int> eps(static_cast<std::size_t>(n), 1);
    auto g = make_tararin_group(n);
    const auto rep = orbit_points(make_tararin_cone(g, SignSequence(std::vector<Sign>(eps.size(), Sign::positive))), n, 2);
    EXPECT_EQ(rep.points.size(), oracle_tararin_orbit(n, eps, n, 2));
    EXPECT_EQ(rep.points.size(), std::size_t{1} << (n - 1));
  }
}

TEST(Orbit, ConjugationIsAnAction) {
  auto b = make_braid_group(3);
  auto p = make_dehornoy_cone(b);
  auto ball = make_ball(b, 2);
  const Word f = b->parse_word("s1*s2");
  const Word g = b->parse_word("s2^-1");
  EXPECT_EQ(restrict_cone(*conjugate_cone(p, f * g), ball), restrict_cone(*conjugate_cone(conjugate_cone(p, g), f), ball));
  auto t = make_tararin_group(3);
  auto q = make_tararin_cone(t, SignSequence::parse("+,-,+"));
  auto tb = make_ball(t, 3);
  const Word x3 = t->generator(3);
  EXPECT_EQ(restrict_cone(*conjugate_cone(conjugate_cone(q, x3), x3), tb), restrict_cone(*q, tb));
}

TEST(OrbitContains, Examples) {
  auto t3 = make_tararin_group(3);
  auto p = make_tararin_cone(t3, SignSequence::parse("+,+,+"));
  auto q = make_tararin_cone(t3, SignSequence::parse("-,+,+"));
  const auto same = orbit_closure_contains(p, p, 3, 2);
  ASSERT_TRUE(same.found());
  EXPECT_TRUE(same.conjugator->is_identity());
  const auto s = orbit_closure_contains(q, p, 3, 2);
  ASSERT_TRUE(s.found());
  EXPECT_EQ(s.conjugator->str(), "x2");
  EXPECT_TRUE(verify_certificate(*s.certificate).ok);

  auto z = make_zn_group(2);
  auto a = make_lex_cone(z);
  auto c = make_lex_cone(z, {2, 1});
  for (int radius = 0; radius <= 3; ++radius) EXPECT_FALSE(orbit_closure_contains(c, a, 2, radius).found());
}

TEST(Cofinal, Registry) {
  auto b = make_braid_group(3);
  const Word d = braid::garside_half_twist(b);
  EXPECT_TRUE(is_known_cofinal(d.pow(2)));
  EXPECT_TRUE(is_known_cofinal(d.pow(-2)));
  EXPECT_FALSE(is_known_cofinal(d));
  EXPECT_TRUE(is_known_cofinal(make_zn_group(1)->parse_word("a^-1")));
  EXPECT_FALSE(is_known_cofinal(make_zn_group(1)->parse_word("a^2")));
  EXPECT_FALSE(is_known_cofinal(make_zn_group(2)->parse_word("a")));
}

TEST(Cofinal, Obstructions) {
  auto z = make_zn_group(1);
  const auto r = cofinal_obstruction(make_lex_cone(z), z->parse_word("a"), 4, 5);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_FALSE(r.certificate->tainted);
  EXPECT_TRUE(verify_certificate(*r.certificate).ok);

  auto b = make_braid_group(3);
  const Word d2 = braid::garside_half_twist(b).pow(2);
  const auto rb = cofinal_obstruction(make_dehornoy_cone(b), d2, 3, 4);
  ASSERT_TRUE(rb.certificate.has_value());
  EXPECT_TRUE(verify_certificate(*rb.certificate).ok);

  auto z2 = make_zn_group(2);
  const auto rz = cofinal_obstruction(make_lex_cone(z2), z2->parse_word("b"), 2, 4);
  EXPECT_FALSE(rz.certificate.has_value());
  EXPECT_FALSE(rz.report.cofinal_up_to());
  const auto assumed = cofinal_obstruction(make_lex_cone(z2), z2->parse_word("b"), 2, 4, true);
  EXPECT_FALSE(assumed.certificate.has_value());

  // a^2 in Z passes the finite check but is not on the registry.
  const auto unlisted = cofinal_obstruction(make_lex_cone(z), z->parse_word("a^2"), 4, 5);
  EXPECT_FALSE(unlisted.certificate.has_value());
  const auto tainted = cofinal_obstruction(make_lex_cone(z), z->parse_word("a^2"), 4, 5, true);
  ASSERT_TRUE(tainted.certificate.has_value());
  EXPECT_TRUE(tainted.certificate->tainted);
  EXPECT_TRUE(verify_certificate(*tainted.certificate).ok);
}

TEST(KernelFalsifier, Examples) {
  auto z = make_zn_group(1);
  auto p = make_lex_cone(z);
  const auto r = kernel_containment_falsifier(p, reverse_cone(p), {parse_term(z, "a /\\ 1")}, 5);
  ASSERT_TRUE(r.has_value());
  ASSERT_TRUE(r->certificate.has_value());
  EXPECT_TRUE(verify_certificate(*r->certificate).ok);

  auto b = make_braid_group(3);
  auto d = make_dehornoy_cone(b);
  const Word d2 = braid::garside_half_twist(b).pow(2);
  const auto t = LTerm::meet(LTerm::element(d2), LTerm::element(b->identity()));
  const auto rb = kernel_containment_falsifier(d, reverse_cone(d), {t}, 2);
  ASSERT_TRUE(rb.has_value());
  ASSERT_TRUE(rb->certificate.has_value());
  EXPECT_TRUE(verify_certificate(*rb->certificate).ok);

  // Same orbit in T_2: a small term family finds nothing.
  auto t2 = make_tararin_group(2);
  auto q1 = make_tararin_cone(t2, SignSequence::parse("+,+"));
  auto q2 = make_tararin_cone(t2, SignSequence::parse("-,+"));
  std::vector<LTerm> family;
  for (const char* text : {"x1 /\\ 1", "x2 /\\ 1", "x1^-1 /\\ 1", "x2^-1 /\\ 1", "x2*x1 /\\ 1", "(x1 \\/ 1) /\\ x2",
                           "x1 \\/ x1^-1", "x2 /\\ x1 \\/ 1"}) {
    family.push_back(parse_term(t2, text));
  }
  for (int radius = 1; radius <= 4; ++radius) {
    EXPECT_FALSE(kernel_containment_falsifier(q1, q2, family, radius).has_value()) << radius;
  }
}

TEST(TararinConjugator, Examples) {
  auto t2 = make_tararin_group(2);
  EXPECT_TRUE(tararin_conjugator(t2, SignSequence::parse("+,+"), SignSequence::parse("+,+"), 2).is_identity());
  EXPECT_EQ(tararin_conjugator(t2, SignSequence::parse("+,+"), SignSequence::parse("-,+"), 2).str(), "x2");
  auto t4 = make_tararin_group(4);
  const auto from = SignSequence::parse("+,-,+");
  const auto to = SignSequence::parse("-,+,+");
  const Word g = tararin_conjugator(t4, from, to, 3);
  EXPECT_EQ(g, t4->parse_word("x3*x2"));
  EXPECT_EQ(tararin_conjugator_mismatches(t4, from, to, 3, g), 0U);
  // Flips at different positions commute, so the order of the factors is irrelevant.
  EXPECT_EQ(tararin_conjugator_mismatches(t4, from, to, 3, t4->parse_word("x2*x3")), 0U);
  EXPECT_GT(tararin_conjugator_mismatches(t4, from, to, 3, t4->parse_word("x2")), 0U);
  EXPECT_THROW(tararin_conjugator(t2, SignSequence::parse("+,+"), SignSequence::parse("+,-"), 2), Error);
  EXPECT_THROW(tararin_conjugator(make_zn_group(2), from, to, 2), Error);
}

TEST(MinimalSets, TararinAndZ) {
  auto t1 = make_tararin_group(1);
  const auto r1 = minimal_invariant_sets(complete_lo_space(t1), 2);
  EXPECT_EQ(r1.orbits.size(), 2U);
  EXPECT_TRUE(r1.verified);
  for (int n = 2; n <= 3; ++n) {
    auto g = make_tararin_group(n);
    const auto r = minimal_invariant_sets(complete_lo_space(g), n);
    EXPECT_TRUE(r.verified);
    ASSERT_EQ(r.orbits.size(), 2U);
    // Orbits split by the sign of the top generator.
    for (const auto& block : r.orbits) EXPECT_EQ(block.size(), std::size_t{1} << (n - 1));
  }
  auto b = make_braid_group(2);
  EXPECT_EQ(minimal_invariant_sets(complete_lo_space(b), 1).orbits.size(), 2U);
}

TEST(FiniteCheck, Sizes) {
  EXPECT_EQ(finite_or_uncountable_check(complete_lo_space(make_tararin_group(2))).size, 4U);
  EXPECT_EQ(finite_or_uncountable_check(complete_lo_space(make_tararin_group(3))).size, 8U);
  const auto z = finite_or_uncountable_check(complete_lo_space(make_zn_group(1)));
  EXPECT_EQ(z.size, 2U);
  EXPECT_EQ(z.isolating_sets[0].str(), "a");
  EXPECT_EQ(z.isolating_sets[1].str(), "a^-1");
  // The isolating sets really isolate.
  auto t3 = make_tararin_group(3);
  for (const auto& spec : finite_or_uncountable_check(complete_lo_space(t3)).isolating_sets) {
    EXPECT_EQ(isolated_scan(t3, spec, {1, 2, 3}).outcome, IsolationScan::Outcome::certified);
  }
}

TEST(Certificates, RecordsRoundTripAndTampering) {
  auto t2 = make_tararin_group(2);
  const auto cert = basic_element_certificate(parse_term(t2, "(x1 /\\ x2) \\/ 1"), complete_lo_space(t2));
  ASSERT_TRUE(cert.has_value());
  const auto back = Certificate::parse_records(cert->records());
  EXPECT_EQ(back.records(), cert->records());
  EXPECT_TRUE(verify_certificate(back).ok);

  auto tampered = back;
  tampered.set("cone", "tararin:-,+");
  EXPECT_FALSE(verify_certificate(tampered).ok);
  tampered.set("term", "x1 \\/ 1");
  EXPECT_FALSE(verify_certificate(tampered).ok);

  auto z = make_zn_group(1);
  auto obstruction = *cofinal_obstruction(make_lex_cone(z), z->parse_word("a"), 3, 4).certificate;
  obstruction.set("element", "a^2");
  obstruction.set("term", "a^2 /\\ 1");
  EXPECT_FALSE(verify_certificate(obstruction).ok);

  Certificate fake;
  fake.kind = Certificate::Kind::isolation_up_to_radius;
  fake.set("group", "free:rank=2");
  fake.set("open_set", "a,b");
  fake.set("radii", "1,2");
  EXPECT_FALSE(verify_certificate(fake).ok);

  EXPECT_THROW(Certificate::parse_records("certificate.statement=x\n"), Error);
  EXPECT_THROW(Certificate::parse_records("certificate.kind=nonsense\n"), Error);
}
