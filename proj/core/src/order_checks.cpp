#include "ordlat/order_checks.hpp"

#include <random>

#include "ordlat/error.hpp"

namespace ordlat {

ConradianReport is_conradian_on_ball(const Cone& cone, int radius, int exponent, std::size_t cap) {
  if (exponent < 1) throw Error(ErrorKind::invalid_argument, "Conradian exponent must be >= 1");
  const Ball ball(cone.group(), radius, cap);
  std::vector<Word> positive;
  for (std::size_t i = 1; i < ball.size(); ++i) {
    if (cone.is_positive(ball[i])) positive.push_back(ball[i]);
  }
  ConradianReport report;
  report.radius = radius;
  report.exponent = exponent;
  for (const auto& g : positive) {
    const Word power = g.pow(exponent);
    for (const auto& h : positive) {
      ++report.pairs_checked;
      if (cone.compare(h * power, g) != Order::greater) report.violations.emplace_back(g, h);
    }
  }
  return report;
}

bool CofinalReport::cofinal_up_to() const noexcept {
  for (const auto& e : entries) {
    if (!e.n) return false;
  }
  return true;
}

std::optional<Word> CofinalReport::first_failure() const {
  for (const auto& e : entries) {
    if (!e.n) return e.h;
  }
  return std::nullopt;
}

CofinalReport is_cofinal_on_ball(const Cone& cone, const Word& g, int radius, int bound,
                                 std::size_t cap) {
  if (bound < 1) throw Error(ErrorKind::invalid_argument, "cofinality exponent bound must be >= 1");
  cone.group()->check_member(g);
  CofinalReport report;
  report.element = (!g.is_identity() && !cone.is_positive(g)) ? g.inverse() : g;
  report.radius = radius;
  report.bound = bound;

  std::vector<Word> upper;
  std::vector<Word> lower;
  Word power = cone.group()->identity();
  for (int n = 1; n <= bound; ++n) {
    power = power * report.element;
    upper.push_back(power);
    lower.push_back(power.inverse());
  }

  const Ball ball(cone.group(), radius, cap);
  for (const auto& h : ball.elements()) {
    CofinalEntry entry{h, std::nullopt};
    for (int n = 1; n <= bound; ++n) {
      const auto k = static_cast<std::size_t>(n - 1);
      if (cone.less(lower[k], h) && cone.less(h, upper[k])) {
        entry.n = n;
        break;
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

namespace {

Order flip(Order o) {
  if (o == Order::less) return Order::greater;
  if (o == Order::greater) return Order::less;
  return o;
}

}  // namespace

AxiomReport check_order_axioms(const Cone& cone, int radius, const AxiomOptions& options) {
  const Ball ball(cone.group(), radius, options.cap);
  const std::size_t n = ball.size();
  AxiomReport report;
  report.radius = radius;
  report.ball_size = n;
  auto violate = [&](std::string axiom, std::vector<Word> elements) {
    if (report.violations.size() < options.max_violations) {
      report.violations.push_back({std::move(axiom), std::move(elements)});
    }
  };

  for (std::size_t i = 1; i < n; ++i) {
    const Word& g = ball[i];
    if (cone.sign(g) == cone.sign(g.inverse())) violate("antisymmetry", {g});
  }

  // cmp[i][j] is reused by the invariance checks below.
  std::vector<std::vector<Order>> cmp(n, std::vector<Order>(n, Order::equal));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      ++report.pairs_checked;
      cmp[i][j] = cone.compare(ball[i], ball[j]);
      if (cmp[i][j] == Order::equal) violate("totality", {ball[i], ball[j]});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cmp[i][j] != flip(cmp[j][i])) violate("consistency", {ball[i], ball[j]});
    }
  }

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  auto check_triple = [&](std::size_t f, std::size_t g, std::size_t h, bool right) {
    if (g == h) return;
    const Word& fw = ball[f];
    const Order expected = cmp[g][h];
    const Order got = right ? cone.compare(ball[g] * fw, ball[h] * fw)
                            : cone.compare(fw * ball[g], fw * ball[h]);
    if (got != expected) {
      violate(right ? "right-invariance" : "left-invariance", {fw, ball[g], ball[h]});
    }
  };
  auto run = [&](std::size_t samples, bool right, std::size_t& counter) {
    if (samples == 0) {
      for (std::size_t f = 1; f < n; ++f) {
        for (std::size_t g = 0; g < n; ++g) {
          for (std::size_t h = g + 1; h < n; ++h) {
            ++counter;
            check_triple(f, g, h, right);
          }
        }
      }
      return;
    }
    for (std::size_t s = 0; s < samples; ++s) {
      const std::size_t f = pick(rng);
      const std::size_t g = pick(rng);
      const std::size_t h = pick(rng);
      ++counter;
      check_triple(f, g, h, right);
    }
  };
  run(options.samples, false, report.triples_checked);
  if (options.bi) run(options.right_samples, true, report.right_triples_checked);
  return report;
}

}  // namespace ordlat
