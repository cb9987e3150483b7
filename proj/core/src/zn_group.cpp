#include "ordlat/backends.hpp"
#include "ordlat/error.hpp"
#include "ordlat/group.hpp"

namespace ordlat {
namespace {

// Integer vectors, stored as syllables in coordinate order.
class ZnGroup final : public Group {
 public:
  explicit ZnGroup(int rank) : Group(Family::zn, rank) {}

 protected:
  std::vector<Syllable> canonicalize(std::span<const Syllable> raw) const override {
    std::vector<std::int64_t> v(static_cast<std::size_t>(rank()), 0);
    for (const auto& s : raw) v[static_cast<std::size_t>(s.generator - 1)] += s.exponent;
    std::vector<Syllable> out;
    for (int i = 0; i < rank(); ++i) {
      if (v[static_cast<std::size_t>(i)] != 0) out.push_back({i + 1, v[static_cast<std::size_t>(i)]});
    }
    return out;
  }
  bool letters_style() const noexcept override { return true; }
};

}  // namespace

GroupPtr make_zn_group(int rank) {
  if (rank < 1) throw Error(ErrorKind::invalid_argument, "zn rank must be >= 1");
  return std::make_shared<ZnGroup>(rank);
}

std::vector<std::int64_t> zn_coordinates(const Word& w) {
  if (!w.group() || w.group()->family() != Family::zn) {
    throw Error(ErrorKind::wrong_backend, "zn_coordinates needs a zn word");
  }
  std::vector<std::int64_t> v(static_cast<std::size_t>(w.group()->rank()), 0);
  for (const auto& s : w.syllables()) v[static_cast<std::size_t>(s.generator - 1)] = s.exponent;
  return v;
}

}  // namespace ordlat
