#pragma once

#include <cstdint>
#include <vector>

#include "ordlat/group.hpp"

namespace ordlat {

// Truncated Magnus expansion a_i -> 1 + A_i of a free-group word in the ring
// of noncommutative power series. Monomials are indexed degree by degree; a
// monomial's digits are the *positions* of its variables in `order`, so index
// order within a degree is lexicographic order for that variable order.
class MagnusSeries {
 public:
  MagnusSeries(int variables, int degree, std::vector<int> order);

  int variables() const noexcept { return variables_; }
  int degree() const noexcept { return degree_; }
  const std::vector<int>& order() const noexcept { return order_; }

  // Right-multiplies by (1 + A_g)^{e}, e = +-1.
  void multiply_letter(int generator, int e);

  // Coefficient of the monomial A_{g_1} ... A_{g_m} (generators 1-based).
  std::int64_t coefficient(const std::vector<int>& monomial) const;

  // First nonzero coefficient of positive degree in degree-then-lex order;
  // 0 when every coefficient up to the truncation degree vanishes.
  std::int64_t leading_coefficient() const;

 private:
  std::size_t offset(int d) const { return offsets_[static_cast<std::size_t>(d)]; }

  int variables_;
  int degree_;
  std::vector<int> order_;
  std::vector<int> digit_of_;  // generator -> digit
  std::vector<std::size_t> offsets_;
  std::vector<std::int64_t> coefficients_;
};

MagnusSeries magnus_expansion(const Word& w, int degree, const std::vector<int>& order);

}  // namespace ordlat
