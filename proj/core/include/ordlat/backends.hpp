#pragma once

// Family-specific views of Words.

#include <cstdint>
#include <vector>

#include "ordlat/group.hpp"

namespace ordlat {

// Z^n: the coordinate vector (v_1, ..., v_n).
std::vector<std::int64_t> zn_coordinates(const Word& w);

// Tararin normal form x_n^{a_n} ... x_1^{a_1}: returns (a_1, ..., a_n).
std::vector<std::int64_t> tararin_exponents(const Word& w);
Word tararin_from_exponents(const GroupPtr& group, const std::vector<std::int64_t>& a);

namespace braid {

// Signed letters: +i is s_i, -i is s_i^-1.
using Letters = std::vector<int>;

Letters letters_of(const Word& w);

// Dehornoy handle reduction. Always reduces the handle whose right end comes
// first, which makes every reduction step a permitted one. The result is
// empty, s_m-positive or s_m-negative where m is the least index present.
Letters handle_reduce(Letters w);

// +1 if the handle-reduced form is s_m-positive, -1 if negative, 0 if trivial.
int dehornoy_sign(const Letters& w);

// Delta_n = (s_{n-1} ... s_1)(s_{n-1} ... s_2) ... (s_{n-1}).
Word garside_half_twist(const GroupPtr& group);

// The permutation of strands (0-based images) induced by the braid.
std::vector<int> permutation(const Letters& w, int strands);

}  // namespace braid

}  // namespace ordlat
