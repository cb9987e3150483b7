#include "ordlat/magnus.hpp"

#include <cstdlib>

#include "ordlat/error.hpp"

namespace ordlat {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw Error(ErrorKind::precision_exhausted, "Magnus coefficient overflow");
  }
  return out;
}

}  // namespace

MagnusSeries::MagnusSeries(int variables, int degree, std::vector<int> order)
    : variables_(variables), degree_(degree), order_(std::move(order)) {
  if (variables < 1 || degree < 1) {
    throw Error(ErrorKind::invalid_argument, "Magnus expansion needs rank >= 1 and degree >= 1");
  }
  if (order_.size() != static_cast<std::size_t>(variables)) {
    throw Error(ErrorKind::invalid_argument, "Magnus variable order must list every generator");
  }
  digit_of_.assign(static_cast<std::size_t>(variables) + 1, -1);
  for (std::size_t pos = 0; pos < order_.size(); ++pos) {
    const int g = order_[pos];
    if (g < 1 || g > variables || digit_of_[static_cast<std::size_t>(g)] != -1) {
      throw Error(ErrorKind::invalid_argument, "Magnus variable order is not a permutation");
    }
    digit_of_[static_cast<std::size_t>(g)] = static_cast<int>(pos);
  }
  offsets_.push_back(0);
  std::size_t level = 1;
  for (int d = 0; d <= degree; ++d) {
    offsets_.push_back(offsets_.back() + level);
    level *= static_cast<std::size_t>(variables);
  }
  coefficients_.assign(offsets_.back(), 0);
  coefficients_[0] = 1;
}

void MagnusSeries::multiply_letter(int generator, int e) {
  const auto digit = static_cast<std::size_t>(digit_of_.at(static_cast<std::size_t>(generator)));
  const auto k = static_cast<std::size_t>(variables_);
  // Monomial w*A with w at position j of degree d-1 sits at position j*k+digit of degree d.
  if (e > 0) {
    // new[wA] = old[wA] + old[w]; descend so old[w] is still unmodified.
    for (int d = degree_; d >= 1; --d) {
      const std::size_t count = offset(d) - offset(d - 1);
      for (std::size_t j = 0; j < count; ++j) {
        auto& target = coefficients_[offset(d) + j * k + digit];
        target = checked_add(target, coefficients_[offset(d - 1) + j]);
      }
    }
  } else {
    // new * (1 + A) = old, so new[wA] = old[wA] - new[w]; ascend.
    for (int d = 1; d <= degree_; ++d) {
      const std::size_t count = offset(d) - offset(d - 1);
      for (std::size_t j = 0; j < count; ++j) {
        auto& target = coefficients_[offset(d) + j * k + digit];
        target = checked_add(target, -coefficients_[offset(d - 1) + j]);
      }
    }
  }
}

std::int64_t MagnusSeries::coefficient(const std::vector<int>& monomial) const {
  const auto d = static_cast<int>(monomial.size());
  if (d > degree_) throw Error(ErrorKind::invalid_argument, "monomial beyond truncation degree");
  std::size_t j = 0;
  for (int g : monomial) {
    j = j * static_cast<std::size_t>(variables_) +
        static_cast<std::size_t>(digit_of_.at(static_cast<std::size_t>(g)));
  }
  return coefficients_[offset(d) + j];
}

std::int64_t MagnusSeries::leading_coefficient() const {
  for (std::size_t i = 1; i < coefficients_.size(); ++i) {
    if (coefficients_[i] != 0) return coefficients_[i];
  }
  return 0;
}

MagnusSeries magnus_expansion(const Word& w, int degree, const std::vector<int>& order) {
  if (!w.group() || w.group()->family() != Family::free) {
    throw Error(ErrorKind::wrong_backend, "Magnus expansion needs a free-group word");
  }
  MagnusSeries series(w.group()->rank(), degree, order);
  for (const auto& s : w.syllables()) {
    const int e = s.exponent > 0 ? 1 : -1;
    for (std::int64_t i = 0; i < std::llabs(s.exponent); ++i) series.multiply_letter(s.generator, e);
  }
  return series;
}

}  // namespace ordlat
