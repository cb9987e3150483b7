#pragma once

#include <random>
#include <string>
#include <vector>

#include "ordlat/group.hpp"

namespace testing_support {

inline ordlat::Word random_word(const ordlat::GroupPtr& g, int length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> gen(1, g->rank());
  std::bernoulli_distribution neg(0.5);
  std::vector<ordlat::Syllable> raw;
  for (int i = 0; i < length; ++i) raw.push_back({gen(rng), neg(rng) ? -1 : 1});
  return g->normal_form(raw);
}

inline std::vector<ordlat::GroupPtr> sample_groups() {
  return {ordlat::make_free_group(2), ordlat::make_zn_group(2), ordlat::make_tararin_group(3),
          ordlat::make_braid_group(3), ordlat::make_braid_group(4)};
}

}  // namespace testing_support
