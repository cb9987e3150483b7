#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>

#include "../oracles/oracles.hpp"
#include "../support.hpp"
#include "ordlat/backends.hpp"
#include "ordlat/ball.hpp"
#include "ordlat/cone.hpp"
#include "ordlat/error.hpp"
#include "ordlat/magnus.hpp"

using namespace ordlat;
using testing_support::random_word;

TEST(SignSequence, ParseAndPrint) {
  const auto s = SignSequence::parse("+,-,+");
  EXPECT_EQ(s.size(), 3U);
  EXPECT_EQ(s[1], Sign::negative);
  EXPECT_EQ(s.str(), "+,-,+");
  EXPECT_EQ(s.flipped(0).str(), "-,-,+");
  EXPECT_EQ(s.negated().str(), "-,+,-");
  EXPECT_EQ(s.padded(5).str(), "+,-,+,+,+");
  EXPECT_THROW(SignSequence::parse("+,x"), Error);
}

TEST(TararinCone, MatchesOracle) {
  for (int n = 1; n <= 4; ++n) {
    auto g = make_tararin_group(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(n));
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      std::vector<Sign> eps;
      std::vector<int> eps_int;
      for (int i = 0; i < n; ++i) {
        const bool neg = (mask >> i) & 1U;
        eps.push_back(neg ? Sign::negative : Sign::positive);
        eps_int.push_back(neg ? -1 : 1);
      }
      auto cone = make_tararin_cone(g, SignSequence(eps));
      for (int i = 0; i < 60; ++i) {
        auto w = random_word(g, 7, rng);
        const int expected = oracle::tararin_sign(w, eps_int);
        if (expected == 0) {
          EXPECT_THROW(cone->sign(w), Error);
        } else {
          EXPECT_EQ(static_cast<int>(cone->sign(w)), expected) << w.str();
        }
      }
    }
  }
}

TEST(TararinCone, FlipRuleOnSmallBall) {
  auto g = make_tararin_group(3);
  const auto eps = SignSequence::parse("+,+,+");
  const Ball ball(g, 3);
  for (int i = 1; i < 3; ++i) {
    auto conj = conjugate_cone(make_tararin_cone(g, eps), g->generator(i + 1));
    auto flipped = make_tararin_cone(g, eps.flipped(static_cast<std::size_t>(i - 1)));
    for (std::size_t k = 1; k < ball.size(); ++k) EXPECT_EQ(conj->sign(ball[k]), flipped->sign(ball[k]));
  }
}

TEST(DehornoyCone, SigmaPositiveWordsArePositive) {
  // A word in which the least generator only occurs positively is
  // sigma-positive, whatever happens to the other letters.
  auto g = make_braid_group(4);
  auto cone = make_dehornoy_cone(g);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> len(0, 4);
  std::uniform_int_distribution<int> high(2, 3);
  std::bernoulli_distribution neg(0.5);
  for (int i = 0; i < 300; ++i) {
    const int least = 1 + static_cast<int>(rng() % 2);
    std::vector<Syllable> raw;
    raw.push_back({least, 1});
    for (int k = len(rng); k > 0; --k) {
      const int gen = std::max(least + 1, high(rng));
      raw.push_back({gen, neg(rng) ? -1 : 1});
      if (neg(rng)) raw.push_back({least, 1});
    }
    std::shuffle(raw.begin() + 1, raw.end(), rng);
    const Word w = g->normal_form(raw);
    EXPECT_EQ(cone->sign(w), Sign::positive) << w.str();
    EXPECT_EQ(cone->sign(w.inverse()), Sign::negative);
  }
}

TEST(DehornoyCone, KnownComparisons) {
  auto g = make_braid_group(3);
  auto cone = make_dehornoy_cone(g);
  EXPECT_TRUE(cone->is_positive(g->parse_word("s1")));
  EXPECT_TRUE(cone->is_positive(g->parse_word("s2")));
  EXPECT_TRUE(cone->is_positive(g->parse_word("s2^-5*s1*s2^3")));
  EXPECT_FALSE(cone->is_positive(g->parse_word("s1^-1*s2^4")));
  EXPECT_TRUE(cone->less(g->parse_word("s2"), g->parse_word("s1")));
  EXPECT_THROW(cone->sign(g->parse_word("s1*s2*s1*s2^-1*s1^-1*s2^-1")), Error);
}

TEST(Magnus, CoefficientsMatchBruteForce) {
  auto g = make_free_group(3);
  std::mt19937_64 rng(9);
  const int degree = 5;
  for (int i = 0; i < 80; ++i) {
    auto w = random_word(g, 6, rng);
    const auto series = magnus_expansion(w, degree, {1, 2, 3});
    const auto expected = oracle::magnus(w, degree);
    // Compare every monomial up to degree 3, plus the terms present.
    std::vector<std::vector<int>> monomials{{}};
    for (int d = 0; d < 3; ++d) {
      std::vector<std::vector<int>> next;
      for (const auto& m : monomials) {
        if (static_cast<int>(m.size()) != d) continue;
        for (int x = 1; x <= 3; ++x) {
          auto mm = m;
          mm.push_back(x);
          next.push_back(mm);
        }
      }
      monomials.insert(monomials.end(), next.begin(), next.end());
    }
    for (const auto& [m, c] : expected) monomials.push_back(m);
    for (const auto& m : monomials) {
      const auto it = expected.find(m);
      EXPECT_EQ(series.coefficient(m), it == expected.end() ? 0 : it->second);
    }
  }
}

TEST(Magnus, SignMatchesBruteForce) {
  auto g = make_free_group(2);
  std::mt19937_64 rng(10);
  for (const std::vector<int>& order : {std::vector<int>{1, 2}, std::vector<int>{2, 1}}) {
    MagnusOptions opts;
    opts.order = order;
    auto cone = make_magnus_cone(g, opts);
    for (int i = 0; i < 200; ++i) {
      auto w = random_word(g, 7, rng);
      if (w.is_identity()) continue;
      const auto lead = oracle::magnus_lead(oracle::magnus(w, 8), order);
      ASSERT_NE(lead, 0);
      EXPECT_EQ(static_cast<int>(cone->sign(w)), lead > 0 ? 1 : -1) << w.str();
    }
  }
}

TEST(Magnus, PrecisionExhaustion) {
  auto g = make_free_group(2);
  MagnusOptions opts;
  opts.degree = 2;
  auto cone = make_magnus_cone(g, opts);
  // The commutator [a, b] starts in degree 2, [[a,b],a] only in degree 3.
  const Word c = g->parse_word("a*b*a^-1*b^-1");
  EXPECT_NO_THROW(cone->sign(c));
  try {
    cone->sign(c * g->parse_word("a") * c.inverse() * g->parse_word("a^-1"));
    FAIL() << "expected precision_exhausted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::precision_exhausted);
  }
}

TEST(LexCone, PriorityAndSigns) {
  auto g = make_zn_group(2);
  auto natural = make_lex_cone(g);
  EXPECT_TRUE(natural->is_positive(g->parse_word("a*b^-7")));
  auto swapped = make_lex_cone(g, {2, 1}, {Sign::negative, Sign::positive});
  EXPECT_FALSE(swapped->is_positive(g->parse_word("a^9*b")));
  EXPECT_TRUE(swapped->is_positive(g->parse_word("a")));
  EXPECT_EQ(swapped->spec(), "lex:perm=2,1;signs=-,+");
  EXPECT_THROW(make_lex_cone(make_free_group(2)), Error);
}

TEST(ConeSpec, RoundTrips) {
  auto t = make_tararin_group(3);
  auto b = make_braid_group(3);
  auto f = make_free_group(2);
  auto z = make_zn_group(2);
  const std::vector<std::pair<GroupPtr, std::string>> specs = {
      {t, "tararin:+,-,+"},
      {b, "dehornoy"},
      {b, "rev(dehornoy)"},
      {f, "magnus:order=b<a;deg=6"},
      {z, "lex:perm=2,1;signs=+,-"},
      {t, "conj(x2, tararin:+,+,+)"},
  };
  for (const auto& [g, spec] : specs) {
    auto cone = parse_cone(g, spec);
    EXPECT_EQ(cone->spec(), spec);
    auto again = parse_cone(g, cone->spec());
    const Ball ball(g, 2);
    for (std::size_t k = 1; k < ball.size(); ++k) EXPECT_EQ(cone->sign(ball[k]), again->sign(ball[k]));
  }
  EXPECT_THROW(parse_cone(t, "dehornoy"), Error);
  EXPECT_THROW(parse_cone(b, "bogus:1"), Error);
}

TEST(ConeOps, ReverseAndConjugate) {
  auto g = make_braid_group(3);
  auto p = make_dehornoy_cone(g);
  auto r = reverse_cone(p);
  const Ball ball(g, 2);
  const Word f = g->parse_word("s1*s2^-1");
  auto c = conjugate_cone(p, f);
  auto cc = conjugate_cone(c, f.inverse());
  for (std::size_t k = 1; k < ball.size(); ++k) {
    const Word& w = ball[k];
    EXPECT_EQ(r->sign(w), -p->sign(w));
    EXPECT_EQ(reverse_cone(r)->sign(w), p->sign(w));
    EXPECT_EQ(c->sign(w), p->sign(f.inverse() * w * f));
    EXPECT_EQ(cc->sign(w), p->sign(w));
  }
}

TEST(FiniteCone, FileAndDomain) {
  auto g = make_zn_group(1);
  const auto path = std::filesystem::temp_directory_path() / "ordlat_finite_cone.txt";
  {
    std::ofstream out(path);
    out << "# natural order on a ball\na +\na^2 +\n";
  }
  auto cone = parse_cone(g, "finite:@" + path.string());
  EXPECT_TRUE(cone->is_positive(g->parse_word("a^2")));
  EXPECT_FALSE(cone->is_positive(g->parse_word("a^-1")));
  EXPECT_TRUE(cone->finite_domain());
  try {
    cone->sign(g->parse_word("a^3"));
    FAIL() << "expected outside_domain";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::outside_domain);
  }
  EXPECT_THROW(make_finite_cone(g, {{g->parse_word("a"), Sign::positive}, {g->parse_word("a^-1"), Sign::positive}}),
               Error);
  // a, a^2 known, a^3 = a*a^2 known and negative: closure violation.
  EXPECT_THROW(make_finite_cone(g, {{g->parse_word("a"), Sign::positive},
                                    {g->parse_word("a^2"), Sign::positive},
                                    {g->parse_word("a^3"), Sign::negative}}),
               Error);
  std::filesystem::remove(path);
}
