#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

#include "ordlat/backends.hpp"
#include "ordlat/error.hpp"
#include "ordlat/group.hpp"

namespace ordlat {
namespace braid {

Letters letters_of(const Word& w) {
  Letters out;
  for (const auto& s : w.syllables()) {
    const int letter = s.exponent < 0 ? -s.generator : s.generator;
    for (std::int64_t k = 0; k < std::llabs(s.exponent); ++k) out.push_back(letter);
  }
  return out;
}

namespace {

// Right end of the first handle at or after `from`, with its left end.
// A s_i-handle is s_i^e v s_i^-e where v only uses generators of index > i.
bool find_first_handle(const Letters& w, std::size_t from, std::size_t& left,
                       std::size_t& right) {
  for (std::size_t q = from; q < w.size(); ++q) {
    const int index = std::abs(w[q]);
    for (std::size_t p = q; p-- > 0;) {
      const int j = std::abs(w[p]);
      if (j > index) continue;
      if (j == index && w[p] == -w[q]) {
        left = p;
        right = q;
        return true;
      }
      break;
    }
  }
  return false;
}

}  // namespace

Letters handle_reduce(Letters w) {
  std::size_t from = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  while (find_first_handle(w, from, left, right)) {
    const int index = std::abs(w[left]);
    const int e = w[left] > 0 ? 1 : -1;
    Letters replacement;
    replacement.reserve(3 * (right - left));
    for (std::size_t k = left + 1; k < right; ++k) {
      const int letter = w[k];
      if (std::abs(letter) == index + 1) {
        const int d = letter > 0 ? 1 : -1;
        // s_i^e s_{i+1}^d s_i^-e = s_{i+1}^-e s_i^d s_{i+1}^e
        replacement.push_back(-e * (index + 1));
        replacement.push_back(d * index);
        replacement.push_back(e * (index + 1));
      } else {
        replacement.push_back(letter);
      }
    }
    Letters next;
    next.reserve(w.size() - (right - left + 1) + replacement.size());
    next.insert(next.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(left));
    next.insert(next.end(), replacement.begin(), replacement.end());
    next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(right) + 1, w.end());
    w = std::move(next);
    // Nothing ending before `left` can have become a handle.
    from = left;
  }
  return w;
}

int dehornoy_sign(const Letters& w) {
  const Letters reduced = handle_reduce(w);
  if (reduced.empty()) return 0;
  int least = std::abs(reduced.front());
  int sign = reduced.front() > 0 ? 1 : -1;
  for (int letter : reduced) {
    if (std::abs(letter) < least) {
      least = std::abs(letter);
      sign = letter > 0 ? 1 : -1;
    }
  }
  return sign;
}

std::vector<int> permutation(const Letters& w, int strands) {
  std::vector<int> perm(static_cast<std::size_t>(strands));
  std::iota(perm.begin(), perm.end(), 0);
  for (int letter : w) {
    const auto i = static_cast<std::size_t>(std::abs(letter) - 1);
    std::swap(perm[i], perm[i + 1]);
  }
  return perm;
}

}  // namespace braid

namespace {

std::vector<Syllable> to_syllables(const braid::Letters& letters) {
  std::vector<Syllable> out;
  for (int letter : letters) {
    const int gen = std::abs(letter);
    const int e = letter > 0 ? 1 : -1;
    if (!out.empty() && out.back().generator == gen && (out.back().exponent > 0) == (e > 0)) {
      out.back().exponent += e;
    } else {
      out.push_back({gen, e});
    }
  }
  return out;
}

braid::Letters letters_from(std::span<const Syllable> syllables) {
  braid::Letters out;
  for (const auto& s : syllables) {
    const int letter = s.exponent < 0 ? -s.generator : s.generator;
    for (std::int64_t k = 0; k < std::llabs(s.exponent); ++k) out.push_back(letter);
  }
  return out;
}

// B_n on generators s_1..s_{n-1}. Stored words are handle-reduced; two words
// name the same braid iff the handle reduction of u^-1 v is empty.
class BraidGroup final : public Group {
 public:
  explicit BraidGroup(int strands) : Group(Family::braid, strands - 1), strands_(strands) {}

  int parameter() const noexcept override { return strands_; }

 protected:
  std::vector<Syllable> canonicalize(std::span<const Syllable> raw) const override {
    return to_syllables(braid::handle_reduce(letters_from(raw)));
  }

  bool equal_syllables(std::span<const Syllable> u, std::span<const Syllable> v) const override {
    if (std::equal(u.begin(), u.end(), v.begin(), v.end())) return true;
    braid::Letters w = letters_from(formal_inverse(u));
    const braid::Letters rhs = letters_from(v);
    w.insert(w.end(), rhs.begin(), rhs.end());
    return braid::handle_reduce(std::move(w)).empty();
  }

  // Exponent sum and strand permutation are homomorphic images, so equal
  // braids always land in the same bucket.
  std::string key_of(std::span<const Syllable> w) const override {
    const braid::Letters letters = letters_from(w);
    std::int64_t exponent_sum = 0;
    for (int letter : letters) exponent_sum += letter > 0 ? 1 : -1;
    std::string key = std::to_string(exponent_sum) + "|";
    for (int image : braid::permutation(letters, strands_)) {
      key += std::to_string(image);
      key += ',';
    }
    return key;
  }

  char indexed_prefix() const noexcept override { return 's'; }

 private:
  int strands_;
};

}  // namespace

GroupPtr make_braid_group(int strands) {
  if (strands < 2) throw Error(ErrorKind::invalid_argument, "braid n must be >= 2");
  return std::make_shared<BraidGroup>(strands);
}

namespace braid {

Word garside_half_twist(const GroupPtr& group) {
  if (!group || group->family() != Family::braid) {
    throw Error(ErrorKind::wrong_backend, "the Garside half-twist needs a braid backend");
  }
  const int n = group->parameter();
  std::vector<Syllable> raw;
  for (int low = 1; low <= n - 1; ++low) {
    for (int i = n - 1; i >= low; --i) raw.push_back({i, 1});
  }
  return group->normal_form(raw);
}

}  // namespace braid

}  // namespace ordlat
