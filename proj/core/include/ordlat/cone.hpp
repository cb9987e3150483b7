#pragma once

// Positive cones. A cone assigns a sign to every nonidentity element and
// induces the left-invariant order g < h iff g^-1 h is positive.

#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordlat/group.hpp"

namespace ordlat {

enum class Sign : int { negative = -1, positive = 1 };

constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr char symbol(Sign s) noexcept { return s == Sign::positive ? '+' : '-'; }
Sign parse_sign(std::string_view text);

enum class Order { less, equal, greater };
char symbol(Order o) noexcept;

// A Tararin sign pattern: entry i is + iff x_i is positive.
class SignSequence {
 public:
  SignSequence() = default;
  explicit SignSequence(std::vector<Sign> entries) : entries_(std::move(entries)) {}
  // "+,-,+"
  static SignSequence parse(std::string_view text);

  std::size_t size() const noexcept { return entries_.size(); }
  Sign operator[](std::size_t i) const { return entries_.at(i); }
  const std::vector<Sign>& entries() const noexcept { return entries_; }
  // Copy with entry i (0-based) negated.
  SignSequence flipped(std::size_t i) const;
  SignSequence negated() const;
  // Pads with + up to `length`.
  SignSequence padded(std::size_t length) const;
  std::string str() const;

  friend bool operator==(const SignSequence&, const SignSequence&) = default;

 private:
  std::vector<Sign> entries_;
};

class Cone {
 public:
  explicit Cone(GroupPtr group);
  virtual ~Cone() = default;

  const GroupPtr& group() const noexcept { return group_; }

  // Throws identity_sign on the identity and outside_domain for finite cones.
  Sign sign(const Word& g) const;
  bool is_positive(const Word& g) const { return sign(g) == Sign::positive; }
  Order compare(const Word& g, const Word& h) const;
  bool less(const Word& g, const Word& h) const { return compare(g, h) == Order::less; }

  virtual std::string spec() const = 0;
  virtual bool finite_domain() const noexcept { return false; }

 protected:
  virtual Sign sign_of(const Word& g) const = 0;

 private:
  GroupPtr group_;
};

using ConePtr = std::shared_ptr<const Cone>;

struct MagnusOptions {
  // Generators from smallest to largest; empty means 1 < 2 < ... < rank.
  std::vector<int> order;
  int degree = 8;
};

// P_epsilon on a Tararin group: g with normal form x_n^{a_n}...x_1^{a_1} and
// top nonzero exponent a_k is positive iff a_k * epsilon_k > 0.
ConePtr make_tararin_cone(const GroupPtr& group, const SignSequence& epsilon);
ConePtr make_dehornoy_cone(const GroupPtr& group);
ConePtr make_magnus_cone(const GroupPtr& group, MagnusOptions options = {});
// Lexicographic cone on Z^n: coordinates are compared in `priority` order
// (1-based) and coordinate priority[k] is oriented by signs[k].
ConePtr make_lex_cone(const GroupPtr& group, std::vector<int> priority = {},
                      std::vector<Sign> signs = {});
// A cone known only on the listed words and their inverses. Rejects
// contradictory entries and violations of positivity closure inside the set.
ConePtr make_finite_cone(const GroupPtr& group, const std::vector<std::pair<Word, Sign>>& entries,
                         std::string source = "inline");

ConePtr reverse_cone(const ConePtr& cone);
// f P f^-1: sign(g) = sign_P(f^-1 g f).
ConePtr conjugate_cone(const ConePtr& cone, const Word& f);

// tararin:+,-  dehornoy  magnus:order=a<b;deg=8  lex:perm=2,1;signs=+,-
// finite:@file  rev(...)  conj(f, ...)
ConePtr parse_cone(const GroupPtr& group, std::string_view spec,
                   const std::filesystem::path& base_dir = {});

// `word sign` lines; '#' starts a comment.
std::vector<std::pair<Word, Sign>> read_finite_cone_file(const GroupPtr& group,
                                                         const std::filesystem::path& path);

}  // namespace ordlat
