#include "ordlat/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "ordlat/error.hpp"

namespace ordlat {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::free: return "free";
    case Family::zn: return "zn";
    case Family::tararin: return "tararin";
    case Family::braid: return "braid";
  }
  return "?";
}

std::int64_t Word::letter_count() const noexcept {
  std::int64_t n = 0;
  for (const auto& s : syllables_) n += s.exponent < 0 ? -s.exponent : s.exponent;
  return n;
}

Word Word::operator*(const Word& other) const {
  if (!group_) throw Error(ErrorKind::invalid_argument, "null word");
  return group_->multiply(*this, other);
}

Word Word::inverse() const {
  if (!group_) throw Error(ErrorKind::invalid_argument, "null word");
  return group_->invert(*this);
}

Word Word::pow(std::int64_t k) const {
  if (!group_) throw Error(ErrorKind::invalid_argument, "null word");
  Word base = k < 0 ? inverse() : *this;
  std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Word result = group_->identity();
  while (e != 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e != 0) base = base * base;
  }
  return result;
}

Word Word::conjugated_by(const Word& f) const {
  return f.inverse() * *this * f;
}

std::string Word::str() const {
  if (!group_) return "<null>";
  return group_->format(*this);
}

bool operator==(const Word& a, const Word& b) {
  if (!a.group_ || !b.group_) return a.group_ == b.group_;
  return a.group_->equal(a, b);
}

std::ostream& operator<<(std::ostream& os, const Word& w) { return os << w.str(); }

std::string Group::spec() const {
  std::ostringstream os;
  os << to_string(family_) << ':';
  switch (family_) {
    case Family::free:
    case Family::zn: os << "rank=" << rank_; break;
    case Family::tararin:
    case Family::braid: os << "n=" << parameter(); break;
  }
  return os.str();
}

bool Group::is_abelian() const noexcept {
  switch (family_) {
    case Family::zn: return true;
    case Family::free:
    case Family::tararin:
    case Family::braid: return rank_ <= 1;
  }
  return false;
}

Word Group::identity() const { return make({}); }

Word Group::generator(int index, std::int64_t exponent) const {
  const Syllable s{index, exponent};
  return normal_form(std::span<const Syllable>(&s, 1));
}

void Group::check_generators(std::span<const Syllable> raw) const {
  for (const auto& s : raw) {
    if (s.generator < 1 || s.generator > rank_) {
      throw Error(ErrorKind::invalid_generator,
                  "generator index " + std::to_string(s.generator) +
                      " out of range for " + spec());
    }
  }
}

Word Group::normal_form(std::span<const Syllable> raw) const {
  check_generators(raw);
  return make(canonicalize(raw));
}

void Group::check_member(const Word& w) const {
  if (!w.group() || !w.group()->same_as(*this)) {
    throw Error(ErrorKind::backend_mismatch,
                "word " + w.str() + " does not belong to " + spec());
  }
}

Word Group::multiply(const Word& u, const Word& v) const {
  check_member(u);
  check_member(v);
  if (u.is_identity()) return make(std::vector<Syllable>(v.syllables().begin(), v.syllables().end()));
  if (v.is_identity()) return make(std::vector<Syllable>(u.syllables().begin(), u.syllables().end()));
  std::vector<Syllable> raw(u.syllables().begin(), u.syllables().end());
  raw.insert(raw.end(), v.syllables().begin(), v.syllables().end());
  return make(canonicalize(raw));
}

Word Group::invert(const Word& u) const {
  check_member(u);
  return make(canonicalize(formal_inverse(u.syllables())));
}

bool Group::equal(const Word& u, const Word& v) const {
  check_member(u);
  check_member(v);
  return equal_syllables(u.syllables(), v.syllables());
}

bool Group::equal_syllables(std::span<const Syllable> u, std::span<const Syllable> v) const {
  return std::equal(u.begin(), u.end(), v.begin(), v.end());
}

std::string Group::key_of(std::span<const Syllable> w) const {
  std::string key;
  for (const auto& s : w) {
    key += std::to_string(s.generator);
    key += ':';
    key += std::to_string(s.exponent);
    key += ';';
  }
  return key;
}

std::string Group::bucket_key(const Word& w) const {
  check_member(w);
  return key_of(w.syllables());
}

std::string Group::generator_name(int index) const {
  if (letters_style() && rank_ <= 26) return std::string(1, static_cast<char>('a' + index - 1));
  return std::string(1, indexed_prefix()) + std::to_string(index);
}

std::optional<int> Group::generator_index(std::string_view name) const {
  if (name.empty()) return std::nullopt;
  const char head = name.front();
  if (head < 'a' || head > 'z') return std::nullopt;
  int index = 0;
  if (name.size() == 1) {
    index = head - 'a' + 1;
  } else {
    const auto digits = name.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) return std::nullopt;
  }
  if (index < 1 || index > rank_) return std::nullopt;
  return index;
}

std::string Group::format(const Word& w) const {
  if (w.is_identity()) return "1";
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) out += '*';
    out += generator_name(s.generator);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

std::vector<Syllable> to_letters(std::span<const Syllable> syllables) {
  std::vector<Syllable> letters;
  for (const auto& s : syllables) {
    const std::int64_t step = s.exponent < 0 ? -1 : 1;
    for (std::int64_t k = 0; k != s.exponent; k += step) letters.push_back({s.generator, step});
  }
  return letters;
}

std::vector<Syllable> merge_syllables(std::span<const Syllable> letters) {
  std::vector<Syllable> out;
  for (const auto& s : letters) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Syllable> formal_inverse(std::span<const Syllable> syllables) {
  std::vector<Syllable> out;
  out.reserve(syllables.size());
  for (auto it = syllables.rbegin(); it != syllables.rend(); ++it) {
    out.push_back({it->generator, -it->exponent});
  }
  return out;
}

namespace {

int parse_parameter(std::string_view spec, std::string_view body, std::string_view key) {
  if (body.substr(0, key.size()) != key || body.size() <= key.size() ||
      body[key.size()] != '=') {
    throw Error(ErrorKind::invalid_argument,
                "group spec '" + std::string(spec) + "' expects " + std::string(key) + "=N");
  }
  const auto digits = body.substr(key.size() + 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw Error(ErrorKind::invalid_argument,
                "malformed integer in group spec '" + std::string(spec) + "'");
  }
  return value;
}

}  // namespace

GroupPtr make_group(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::invalid_argument, "group spec '" + std::string(spec) +
                                                 "' must look like family:key=N");
  }
  const auto family = spec.substr(0, colon);
  const auto body = spec.substr(colon + 1);
  if (family == "free") return make_free_group(parse_parameter(spec, body, "rank"));
  if (family == "zn") return make_zn_group(parse_parameter(spec, body, "rank"));
  if (family == "tararin") return make_tararin_group(parse_parameter(spec, body, "n"));
  if (family == "braid") return make_braid_group(parse_parameter(spec, body, "n"));
  throw Error(ErrorKind::invalid_argument, "unknown group family '" + std::string(family) + "'");
}

}  // namespace ordlat
