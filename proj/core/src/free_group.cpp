#include "ordlat/error.hpp"
#include "ordlat/group.hpp"

namespace ordlat {
namespace {

// Freely reduced words; syllables never repeat a generator consecutively.
class FreeGroup final : public Group {
 public:
  explicit FreeGroup(int rank) : Group(Family::free, rank) {}

 protected:
  std::vector<Syllable> canonicalize(std::span<const Syllable> raw) const override {
    return merge_syllables(raw);
  }
  bool letters_style() const noexcept override { return true; }
};

}  // namespace

GroupPtr make_free_group(int rank) {
  if (rank < 1) throw Error(ErrorKind::invalid_argument, "free group rank must be >= 1");
  return std::make_shared<FreeGroup>(rank);
}

}  // namespace ordlat
