#include <gtest/gtest.h>

#include <map>
#include <queue>
#include <random>

#include "../oracles/oracles.hpp"
#include "../support.hpp"
#include "ordlat/backends.hpp"
#include "ordlat/ball.hpp"
#include "ordlat/error.hpp"

using namespace ordlat;
using testing_support::random_word;

TEST(GroupSpec, ParsesEveryFamily) {
  EXPECT_EQ(make_group("free:rank=2")->spec(), "free:rank=2");
  EXPECT_EQ(make_group("zn:rank=3")->rank(), 3);
  EXPECT_EQ(make_group("tararin:n=4")->rank(), 4);
  auto b = make_group("braid:n=3");
  EXPECT_EQ(b->rank(), 2);
  EXPECT_EQ(b->parameter(), 3);
  EXPECT_EQ(b->spec(), "braid:n=3");
}

TEST(GroupSpec, RejectsBadSpecs) {
  EXPECT_THROW(make_group("free"), Error);
  EXPECT_THROW(make_group("heisenberg:n=3"), Error);
  EXPECT_THROW(make_group("braid:n=1"), Error);
  EXPECT_THROW(make_group("zn:rank=x"), Error);
}

TEST(Words, ParseAndFormat) {
  auto f = make_free_group(2);
  EXPECT_EQ(f->parse_word("a*b^-2*a^3").str(), "a*b^-2*a^3");
  EXPECT_EQ(f->parse_word("a*a^-1").str(), "1");
  EXPECT_EQ(f->parse_word("(a*b)^-1").str(), "b^-1*a^-1");
  auto t = make_tararin_group(2);
  EXPECT_EQ(t->parse_word("x2*x1*x2^-1").str(), "x1^-1");
  EXPECT_EQ(t->parse_word("x1*x2").str(), "x2*x1^-1");
  auto b = make_braid_group(3);
  EXPECT_EQ(b->parse_word("s1*s2*s1"), b->parse_word("s2*s1*s2"));
  EXPECT_EQ(braid::garside_half_twist(b), b->parse_word("s2*s1*s2"));
}

TEST(Words, SyntaxErrorsCarryPosition) {
  auto f = make_free_group(2);
  try {
    f->parse_word("a*c");
    FAIL() << "expected a syntax error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_generator);
  }
  try {
    f->parse_word("a**b");
    FAIL() << "expected a syntax error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::syntax);
  }
  EXPECT_THROW(f->parse_word("a^"), Error);
}

TEST(Words, MixingBackendsIsRejected) {
  auto a = make_free_group(2)->generator(1);
  auto x = make_tararin_group(2)->generator(1);
  EXPECT_THROW(a * x, Error);
}

// Normal forms against the reference models on random words.
TEST(Oracle, FreeGroupReduction) {
  auto g = make_free_group(3);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    auto u = random_word(g, 8, rng);
    auto v = random_word(g, 8, rng);
    EXPECT_EQ(oracle::letters(u * v), oracle::concat(oracle::letters(u), oracle::letters(v)));
  }
}

TEST(Oracle, ZnCoordinates) {
  auto g = make_zn_group(3);
  std::mt19937_64 rng(12);
  for (int i = 0; i < 300; ++i) {
    auto u = random_word(g, 10, rng);
    auto v = random_word(g, 10, rng);
    auto su = oracle::zn_vector(u, 3);
    auto sv = oracle::zn_vector(v, 3);
    auto p = zn_coordinates(u * v);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(p[k], su[k] + sv[k]);
    EXPECT_EQ(u * v, v * u);
  }
}

TEST(Oracle, TararinAffineRepresentation) {
  for (int n = 1; n <= 4; ++n) {
    auto g = make_tararin_group(n);
    std::mt19937_64 rng(static_cast<std::uint64_t>(100 + n));
    for (int i = 0; i < 300; ++i) {
      auto u = random_word(g, 9, rng);
      auto v = random_word(g, 9, rng);
      const auto expected = oracle::tararin_affine(u, n).compose(oracle::tararin_affine(v, n));
      const Word uv = u * v;
      EXPECT_EQ(oracle::tararin_affine(uv, n), expected);
      EXPECT_EQ(tararin_exponents(uv), oracle::tararin_exponents(expected));
      EXPECT_EQ(uv == v * u, oracle::tararin_affine(v * u, n) == expected);
    }
  }
}

TEST(Oracle, TararinRelator) {
  auto g = make_tararin_group(4);
  for (int i = 1; i < 4; ++i) {
    const Word xi = g->generator(i);
    const Word xj = g->generator(i + 1);
    EXPECT_EQ(xj * xi * xj.inverse(), xi.inverse());
    for (int k = i + 2; k <= 4; ++k) EXPECT_EQ(xi * g->generator(k), g->generator(k) * xi);
  }
}

TEST(Oracle, BraidArtinAction) {
  for (int strands : {3, 4}) {
    auto g = make_braid_group(strands);
    std::mt19937_64 rng(static_cast<std::uint64_t>(strands));
    for (int i = 0; i < 200; ++i) {
      auto u = random_word(g, 7, rng);
      auto v = random_word(g, 7, rng);
      // The stored (handle-reduced) product is the same braid as the raw product.
      auto raw = oracle::letters(u);
      auto rv = oracle::letters(v);
      raw.insert(raw.end(), rv.begin(), rv.end());
      std::vector<Syllable> syl;
      for (int x : raw) syl.push_back({std::abs(x), x > 0 ? 1 : -1});
      const Word uv = u * v;
      EXPECT_EQ(oracle::artin(uv, strands), oracle::artin(g->normal_form(syl), strands));
      EXPECT_EQ(uv == v * u, oracle::artin(uv, strands) == oracle::artin(v * u, strands));
    }
  }
}

TEST(Braid, HandleReductionKeepsTheBraid) {
  auto g = make_braid_group(4);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 200; ++i) {
    auto w = random_word(g, 10, rng);
    const auto before = oracle::letters(w);
    const auto reduced = braid::handle_reduce(before);
    std::vector<Syllable> syl;
    for (int x : reduced) syl.push_back({std::abs(x), x > 0 ? 1 : -1});
    EXPECT_EQ(oracle::artin(g->normal_form(syl), 4), oracle::artin(w, 4));
    // No handle survives: the least index occurs with one sign only.
    if (!reduced.empty()) {
      int least = 99;
      for (int x : reduced) least = std::min(least, std::abs(x));
      std::set<int> signs;
      for (int x : reduced) {
        if (std::abs(x) == least) signs.insert(x > 0 ? 1 : -1);
      }
      EXPECT_EQ(signs.size(), 1U);
    }
  }
}

TEST(Braid, GarsideSquareIsCentral) {
  for (int strands : {2, 3, 4}) {
    auto g = make_braid_group(strands);
    const Word d2 = braid::garside_half_twist(g).pow(2);
    for (int i = 1; i < strands; ++i) EXPECT_EQ(d2 * g->generator(i), g->generator(i) * d2);
  }
}

namespace {

// Ball size computed with the reference models only.
std::size_t oracle_ball_size(const GroupPtr& g, int radius) {
  std::set<std::string> seen;
  std::vector<Word> frontier{g->identity()};
  seen.insert(oracle::element_key(g->identity()));
  for (int r = 0; r < radius; ++r) {
    std::vector<Word> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= g->rank(); ++i) {
        for (int e : {1, -1}) {
          std::vector<Syllable> raw(w.syllables().begin(), w.syllables().end());
          raw.push_back({i, e});
          Word v = g->normal_form(raw);
          if (seen.insert(oracle::element_key(v)).second) next.push_back(v);
        }
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace

TEST(Ball, SizesMatchOracle) {
  for (const auto& [spec, radius] : std::vector<std::pair<std::string, int>>{
           {"free:rank=2", 3}, {"zn:rank=2", 4}, {"zn:rank=3", 3}, {"tararin:n=2", 4},
           {"tararin:n=3", 3}, {"braid:n=3", 3}, {"braid:n=4", 2}}) {
    auto g = make_group(spec);
    EXPECT_EQ(Ball(g, radius).size(), oracle_ball_size(g, radius)) << spec;
  }
}

TEST(Ball, FrozenSizes) {
  // Values computed by the reference-model BFS above.
  EXPECT_EQ(Ball(make_free_group(2), 2).size(), 17U);
  EXPECT_EQ(Ball(make_zn_group(2), 2).size(), 13U);
  EXPECT_EQ(Ball(make_braid_group(3), 2).size(), 17U);
  EXPECT_EQ(Ball(make_braid_group(3), 3).size(), 47U);
  EXPECT_EQ(Ball(make_tararin_group(4), 3).size(), 129U);
}

TEST(Ball, IndexAndInverses) {
  const Ball ball(make_braid_group(3), 3);
  EXPECT_TRUE(ball[0].is_identity());
  for (std::size_t i = 0; i < ball.size(); ++i) {
    EXPECT_EQ(ball.index_of(ball[i]), i);
    EXPECT_EQ(ball[ball.inverse_index(i)], ball[i].inverse());
  }
  EXPECT_FALSE(ball.contains(make_braid_group(3)->parse_word("s1^4")));
}

TEST(Ball, CapIsEnforced) {
  try {
    Ball(make_free_group(3), 6, 100);
    FAIL() << "expected cap_exceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cap_exceeded);
  }
}
