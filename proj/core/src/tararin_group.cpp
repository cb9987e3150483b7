#include "ordlat/backends.hpp"
#include "ordlat/error.hpp"
#include "ordlat/group.hpp"

namespace ordlat {
namespace {

// T_n = < x_1..x_n | x_{i+1} x_i x_{i+1}^-1 = x_i^-1, x_i x_j = x_j x_i (|i-j|>1) >.
// Normal form x_n^{a_n} ... x_1^{a_1}. Right multiplication by x_k^e moves the
// new letter left past x_{k-1}^{a_{k-1}}, which negates a_{k-1} when e is odd;
// every other letter it passes commutes with it.
class TararinGroup final : public Group {
 public:
  explicit TararinGroup(int n) : Group(Family::tararin, n) {}

 protected:
  std::vector<Syllable> canonicalize(std::span<const Syllable> raw) const override {
    std::vector<std::int64_t> a(static_cast<std::size_t>(rank()), 0);
    for (const auto& s : raw) collect(a, s);
    return from_exponents(a);
  }

 public:
  static void collect(std::vector<std::int64_t>& a, const Syllable& s) {
    const auto k = static_cast<std::size_t>(s.generator);
    if (k >= 2 && (s.exponent % 2 != 0)) a[k - 2] = -a[k - 2];
    a[k - 1] += s.exponent;
  }

  static std::vector<Syllable> from_exponents(const std::vector<std::int64_t>& a) {
    std::vector<Syllable> out;
    for (auto k = a.size(); k-- > 0;) {
      if (a[k] != 0) out.push_back({static_cast<int>(k + 1), a[k]});
    }
    return out;
  }
};

}  // namespace

GroupPtr make_tararin_group(int n) {
  if (n < 1) throw Error(ErrorKind::invalid_argument, "tararin n must be >= 1");
  return std::make_shared<TararinGroup>(n);
}

std::vector<std::int64_t> tararin_exponents(const Word& w) {
  if (!w.group() || w.group()->family() != Family::tararin) {
    throw Error(ErrorKind::wrong_backend, "tararin_exponents needs a tararin word");
  }
  std::vector<std::int64_t> a(static_cast<std::size_t>(w.group()->rank()), 0);
  for (const auto& s : w.syllables()) a[static_cast<std::size_t>(s.generator - 1)] = s.exponent;
  return a;
}

Word tararin_from_exponents(const GroupPtr& group, const std::vector<std::int64_t>& a) {
  if (!group || group->family() != Family::tararin ||
      a.size() != static_cast<std::size_t>(group->rank())) {
    throw Error(ErrorKind::wrong_backend, "exponent vector does not fit the tararin backend");
  }
  const auto syllables = TararinGroup::from_exponents(a);
  return group->normal_form(syllables);
}

}  // namespace ordlat
