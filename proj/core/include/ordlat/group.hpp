#pragma once

// Group backends with solvable word problem: free groups, Z^n, Tararin groups
// and braid groups. Elements are Words stored in the backend's normal form.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ordlat {

enum class Family { free, zn, tararin, braid };

std::string_view to_string(Family family);

// One generator raised to a nonzero power. Generators are 1-based.
struct Syllable {
  int generator = 0;
  std::int64_t exponent = 0;

  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class Group;
using GroupPtr = std::shared_ptr<const Group>;

class Word {
 public:
  Word() = default;

  const GroupPtr& group() const noexcept { return group_; }
  std::span<const Syllable> syllables() const noexcept { return syllables_; }
  bool is_identity() const noexcept { return syllables_.empty(); }
  // Sum of |exponent| over the stored syllables.
  std::int64_t letter_count() const noexcept;

  Word operator*(const Word& other) const;
  Word inverse() const;
  Word pow(std::int64_t k) const;
  // this^-1 * other * this
  Word conjugated_by(const Word& f) const;

  std::string str() const;

  // Equality of group elements, decided by the backend.
  friend bool operator==(const Word& a, const Word& b);

 private:
  friend class Group;
  Word(GroupPtr group, std::vector<Syllable> syllables)
      : group_(std::move(group)), syllables_(std::move(syllables)) {}

  GroupPtr group_;
  std::vector<Syllable> syllables_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

class Group : public std::enable_shared_from_this<Group> {
 public:
  virtual ~Group() = default;
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  Family family() const noexcept { return family_; }
  // Number of generators.
  int rank() const noexcept { return rank_; }
  // The family parameter as written in the spec string (n for braid is the
  // strand count, so rank() == parameter() - 1 there).
  virtual int parameter() const noexcept { return rank_; }
  std::string spec() const;
  bool same_as(const Group& other) const noexcept {
    return family_ == other.family_ && rank_ == other.rank_;
  }
  bool is_abelian() const noexcept;

  Word identity() const;
  Word generator(int index, std::int64_t exponent = 1) const;
  // Canonical representative of the raw syllable sequence.
  Word normal_form(std::span<const Syllable> raw) const;
  Word parse_word(std::string_view text) const;

  Word multiply(const Word& u, const Word& v) const;
  Word invert(const Word& u) const;
  bool equal(const Word& u, const Word& v) const;

  // Hash bucket for the element. Equal elements always share a key; for
  // backends with canonical words the key is exact.
  std::string bucket_key(const Word& w) const;

  std::string format(const Word& w) const;
  std::string generator_name(int index) const;
  std::optional<int> generator_index(std::string_view name) const;

  // Throws backend_mismatch unless w belongs to this group.
  void check_member(const Word& w) const;

 protected:
  Group(Family family, int rank) : family_(family), rank_(rank) {}

  virtual std::vector<Syllable> canonicalize(std::span<const Syllable> raw) const = 0;
  virtual bool equal_syllables(std::span<const Syllable> u,
                               std::span<const Syllable> v) const;
  virtual std::string key_of(std::span<const Syllable> w) const;
  virtual bool letters_style() const noexcept { return false; }
  virtual char indexed_prefix() const noexcept { return 'x'; }

  Word make(std::vector<Syllable> syllables) const {
    return Word(shared_from_this(), std::move(syllables));
  }
  void check_generators(std::span<const Syllable> raw) const;

 private:
  Family family_;
  int rank_;
};

GroupPtr make_free_group(int rank);
GroupPtr make_zn_group(int rank);
GroupPtr make_tararin_group(int n);
GroupPtr make_braid_group(int strands);

// `free:rank=N`, `zn:rank=N`, `tararin:n=N`, `braid:n=N`.
GroupPtr make_group(std::string_view spec);

// Expands syllables into single letters (generator, +-1).
std::vector<Syllable> to_letters(std::span<const Syllable> syllables);
// Merges adjacent syllables of the same generator and drops zero exponents.
std::vector<Syllable> merge_syllables(std::span<const Syllable> letters);
// Inverse of a syllable sequence read in a free monoid.
std::vector<Syllable> formal_inverse(std::span<const Syllable> syllables);

}  // namespace ordlat
