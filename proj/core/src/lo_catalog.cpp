#include "ordlat/lo_catalog.hpp"

#include "ordlat/error.hpp"

namespace ordlat {

FiniteLoSpace::FiniteLoSpace(GroupPtr group, std::vector<ConePtr> cones)
    : group_(std::move(group)), cones_(std::move(cones)) {
  for (const auto& c : cones_) {
    if (!c->group()->same_as(*group_)) {
      throw Error(ErrorKind::backend_mismatch, "cone " + c->spec() + " is not a cone of " + group_->spec());
    }
  }
}

void FiniteLoSpace::require_complete(std::string_view operation) const {
  if (!complete_) {
    throw Error(ErrorKind::incomplete_lo_space,
                std::string(operation) + " needs a complete enumeration of LO(" + group_->spec() + ")");
  }
}

bool has_finite_lo_space(const Group& group) noexcept {
  return group.family() == Family::tararin || group.rank() == 1;
}

FiniteLoSpace complete_lo_space(const GroupPtr& group) {
  std::vector<ConePtr> cones;
  if (group->family() == Family::tararin) {
    const auto n = static_cast<std::size_t>(group->rank());
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Sign> eps(n);
      for (std::size_t i = 0; i < n; ++i) {
        eps[i] = (mask >> (n - 1 - i)) & 1U ? Sign::negative : Sign::positive;
      }
      cones.push_back(make_tararin_cone(group, SignSequence(std::move(eps))));
    }
  } else if (group->rank() == 1) {
    ConePtr natural;
    switch (group->family()) {
      case Family::zn: natural = make_lex_cone(group); break;
      case Family::free: natural = make_magnus_cone(group); break;
      case Family::braid: natural = make_dehornoy_cone(group); break;
      case Family::tararin: break;
    }
    cones.push_back(natural);
    cones.push_back(reverse_cone(natural));
  } else {
    throw Error(ErrorKind::incomplete_lo_space,
                "LO(" + group->spec() + ") is infinite; no complete enumeration exists");
  }
  FiniteLoSpace space(group, std::move(cones));
  space.complete_ = true;
  return space;
}

}  // namespace ordlat
