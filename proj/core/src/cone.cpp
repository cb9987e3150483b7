#include "ordlat/cone.hpp"

#include <cstdlib>
#include <mutex>
#include <unordered_map>

#include "ordlat/backends.hpp"
#include "ordlat/error.hpp"
#include "ordlat/magnus.hpp"

namespace ordlat {

Sign parse_sign(std::string_view text) {
  if (text == "+" || text == "+1") return Sign::positive;
  if (text == "-" || text == "-1") return Sign::negative;
  throw Error(ErrorKind::invalid_argument, "expected a sign (+ or -), got '" + std::string(text) + "'");
}

char symbol(Order o) noexcept {
  switch (o) {
    case Order::less: return '<';
    case Order::equal: return '=';
    case Order::greater: return '>';
  }
  return '?';
}

SignSequence SignSequence::parse(std::string_view text) {
  std::vector<Sign> entries;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto comma = text.find(',', start);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    entries.push_back(parse_sign(item));
    start = comma + 1;
  }
  return SignSequence(std::move(entries));
}

SignSequence SignSequence::flipped(std::size_t i) const {
  auto copy = entries_;
  copy.at(i) = -copy.at(i);
  return SignSequence(std::move(copy));
}

SignSequence SignSequence::negated() const {
  auto copy = entries_;
  for (auto& s : copy) s = -s;
  return SignSequence(std::move(copy));
}

SignSequence SignSequence::padded(std::size_t length) const {
  auto copy = entries_;
  while (copy.size() < length) copy.push_back(Sign::positive);
  return SignSequence(std::move(copy));
}

std::string SignSequence::str() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i != 0) out += ',';
    out += symbol(entries_[i]);
  }
  return out;
}

Cone::Cone(GroupPtr group) : group_(std::move(group)) {
  if (!group_) throw Error(ErrorKind::invalid_argument, "cone needs a group");
}

Sign Cone::sign(const Word& g) const {
  group_->check_member(g);
  if (g.is_identity()) throw Error(ErrorKind::identity_sign, "the identity has no sign");
  return sign_of(g);
}

Order Cone::compare(const Word& g, const Word& h) const {
  group_->check_member(g);
  group_->check_member(h);
  const Word d = g.inverse() * h;
  if (d.is_identity()) return Order::equal;
  return sign_of(d) == Sign::positive ? Order::less : Order::greater;
}

namespace {

Sign from_int(std::int64_t v) { return v > 0 ? Sign::positive : Sign::negative; }

class TararinCone final : public Cone {
 public:
  TararinCone(const GroupPtr& group, SignSequence epsilon)
      : Cone(group), epsilon_(std::move(epsilon)) {}

  std::string spec() const override { return "tararin:" + epsilon_.str(); }

 protected:
  Sign sign_of(const Word& g) const override {
    // Normal form lists the highest generator first.
    const auto& top = g.syllables().front();
    const Sign s = from_int(top.exponent);
    return epsilon_[static_cast<std::size_t>(top.generator - 1)] == Sign::positive ? s : -s;
  }

 private:
  SignSequence epsilon_;
};

class DehornoyCone final : public Cone {
 public:
  using Cone::Cone;
  std::string spec() const override { return "dehornoy"; }

 protected:
  Sign sign_of(const Word& g) const override {
    const int s = braid::dehornoy_sign(braid::letters_of(g));
    if (s == 0) throw Error(ErrorKind::identity_sign, "the identity has no sign");
    return s > 0 ? Sign::positive : Sign::negative;
  }
};

class MagnusCone final : public Cone {
 public:
  MagnusCone(const GroupPtr& group, MagnusOptions options)
      : Cone(group), options_(std::move(options)) {}

  std::string spec() const override {
    std::string out = "magnus:order=";
    for (std::size_t i = 0; i < options_.order.size(); ++i) {
      if (i != 0) out += '<';
      out += group()->generator_name(options_.order[i]);
    }
    out += ";deg=" + std::to_string(options_.degree);
    return out;
  }

 protected:
  Sign sign_of(const Word& g) const override {
    const std::string key = group()->bucket_key(g);
    {
      std::lock_guard lock(mutex_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const auto lead = magnus_expansion(g, options_.degree, options_.order).leading_coefficient();
    if (lead == 0) {
      throw Error(ErrorKind::precision_exhausted,
                  "Magnus expansion of " + g.str() + " vanishes up to degree " +
                      std::to_string(options_.degree));
    }
    const Sign s = from_int(lead);
    std::lock_guard lock(mutex_);
    memo_.emplace(key, s);
    return s;
  }

 private:
  MagnusOptions options_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::string, Sign> memo_;
};

class LexCone final : public Cone {
 public:
  LexCone(const GroupPtr& group, std::vector<int> priority, std::vector<Sign> signs)
      : Cone(group), priority_(std::move(priority)), signs_(std::move(signs)) {}

  std::string spec() const override {
    std::string out = "lex:perm=";
    for (std::size_t i = 0; i < priority_.size(); ++i) {
      if (i != 0) out += ',';
      out += std::to_string(priority_[i]);
    }
    out += ";signs=";
    for (std::size_t i = 0; i < signs_.size(); ++i) {
      if (i != 0) out += ',';
      out += symbol(signs_[i]);
    }
    return out;
  }

 protected:
  Sign sign_of(const Word& g) const override {
    const auto v = zn_coordinates(g);
    for (std::size_t k = 0; k < priority_.size(); ++k) {
      const auto x = v[static_cast<std::size_t>(priority_[k] - 1)];
      if (x != 0) return signs_[k] == Sign::positive ? from_int(x) : -from_int(x);
    }
    throw Error(ErrorKind::internal, "lex cone saw the identity");
  }

 private:
  std::vector<int> priority_;
  std::vector<Sign> signs_;
};

class FiniteCone final : public Cone {
 public:
  FiniteCone(const GroupPtr& group, std::string source) : Cone(group), source_(std::move(source)) {}

  std::string spec() const override { return "finite:" + source_; }
  bool finite_domain() const noexcept override { return true; }

  // Returns false if w is already present with the opposite sign.
  bool add(const Word& w, Sign s) {
    if (auto existing = find(w)) return *existing == s;
    entries_[group()->bucket_key(w)].push_back({w, s});
    return true;
  }

  std::optional<Sign> find(const Word& w) const {
    auto it = entries_.find(group()->bucket_key(w));
    if (it == entries_.end()) return std::nullopt;
    for (const auto& [word, s] : it->second) {
      if (word == w) return s;
    }
    return std::nullopt;
  }

  std::vector<std::pair<Word, Sign>> all() const {
    std::vector<std::pair<Word, Sign>> out;
    for (const auto& [key, bucket] : entries_) out.insert(out.end(), bucket.begin(), bucket.end());
    return out;
  }

 protected:
  Sign sign_of(const Word& g) const override {
    if (auto s = find(g)) return *s;
    throw Error(ErrorKind::outside_domain,
                "element " + g.str() + " lies outside the domain of cone " + spec());
  }

 private:
  std::string source_;
  std::unordered_map<std::string, std::vector<std::pair<Word, Sign>>> entries_;
};

class ReverseCone final : public Cone {
 public:
  explicit ReverseCone(ConePtr inner) : Cone(inner->group()), inner_(std::move(inner)) {}

  std::string spec() const override { return "rev(" + inner_->spec() + ")"; }
  bool finite_domain() const noexcept override { return inner_->finite_domain(); }
  const ConePtr& inner() const noexcept { return inner_; }

 protected:
  Sign sign_of(const Word& g) const override { return -inner_->sign(g); }

 private:
  ConePtr inner_;
};

class ConjugateCone final : public Cone {
 public:
  ConjugateCone(ConePtr inner, Word f)
      : Cone(inner->group()), inner_(std::move(inner)), f_(std::move(f)), f_inv_(f_.inverse()) {}

  std::string spec() const override { return "conj(" + f_.str() + ", " + inner_->spec() + ")"; }
  bool finite_domain() const noexcept override { return inner_->finite_domain(); }
  const ConePtr& inner() const noexcept { return inner_; }
  const Word& conjugator() const noexcept { return f_; }

 protected:
  Sign sign_of(const Word& g) const override { return inner_->sign(f_inv_ * g * f_); }

 private:
  ConePtr inner_;
  Word f_;
  Word f_inv_;
};

void require_family(const GroupPtr& group, Family family, std::string_view what) {
  if (!group) throw Error(ErrorKind::invalid_argument, "cone needs a group");
  if (group->family() != family) {
    throw Error(ErrorKind::wrong_backend, std::string(what) + " cones need a " +
                                              std::string(to_string(family)) + " backend, got " +
                                              group->spec());
  }
}

}  // namespace

ConePtr make_tararin_cone(const GroupPtr& group, const SignSequence& epsilon) {
  require_family(group, Family::tararin, "tararin");
  const auto n = static_cast<std::size_t>(group->rank());
  if (epsilon.size() == 0 || epsilon.size() > n) {
    throw Error(ErrorKind::invalid_argument, "tararin sign sequence must have 1.." +
                                                 std::to_string(n) + " entries");
  }
  return std::make_shared<TararinCone>(group, epsilon.padded(n));
}

ConePtr make_dehornoy_cone(const GroupPtr& group) {
  require_family(group, Family::braid, "dehornoy");
  return std::make_shared<DehornoyCone>(group);
}

ConePtr make_magnus_cone(const GroupPtr& group, MagnusOptions options) {
  require_family(group, Family::free, "magnus");
  std::vector<int> order = options.order;
  std::vector<bool> seen(static_cast<std::size_t>(group->rank()) + 1, false);
  for (int g : order) {
    if (g < 1 || g > group->rank() || seen[static_cast<std::size_t>(g)]) {
      throw Error(ErrorKind::invalid_argument, "magnus order must list distinct generators");
    }
    seen[static_cast<std::size_t>(g)] = true;
  }
  for (int g = 1; g <= group->rank(); ++g) {
    if (!seen[static_cast<std::size_t>(g)]) order.push_back(g);
  }
  if (options.degree < 1) throw Error(ErrorKind::invalid_argument, "magnus degree must be >= 1");
  options.order = std::move(order);
  return std::make_shared<MagnusCone>(group, std::move(options));
}

ConePtr make_lex_cone(const GroupPtr& group, std::vector<int> priority, std::vector<Sign> signs) {
  require_family(group, Family::zn, "lex");
  const int n = group->rank();
  if (priority.empty()) {
    for (int i = 1; i <= n; ++i) priority.push_back(i);
  }
  if (priority.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::invalid_argument, "lex perm must list all " + std::to_string(n) + " coordinates");
  }
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int c : priority) {
    if (c < 1 || c > n || seen[static_cast<std::size_t>(c)]) {
      throw Error(ErrorKind::invalid_argument, "lex perm is not a permutation");
    }
    seen[static_cast<std::size_t>(c)] = true;
  }
  if (signs.empty()) signs.assign(static_cast<std::size_t>(n), Sign::positive);
  if (signs.size() != static_cast<std::size_t>(n)) {
    throw Error(ErrorKind::invalid_argument, "lex signs must have " + std::to_string(n) + " entries");
  }
  return std::make_shared<LexCone>(group, std::move(priority), std::move(signs));
}

ConePtr make_finite_cone(const GroupPtr& group, const std::vector<std::pair<Word, Sign>>& entries,
                         std::string source) {
  auto cone = std::make_shared<FiniteCone>(group, std::move(source));
  for (const auto& [w, s] : entries) {
    group->check_member(w);
    if (w.is_identity()) throw Error(ErrorKind::identity_sign, "finite cone lists the identity");
    if (!cone->add(w, s) || !cone->add(w.inverse(), -s)) {
      throw Error(ErrorKind::invalid_argument, "finite cone gives " + w.str() + " both signs");
    }
  }
  const auto domain = cone->all();
  for (const auto& [g, sg] : domain) {
    if (sg != Sign::positive) continue;
    for (const auto& [h, sh] : domain) {
      if (sh != Sign::positive) continue;
      const Word gh = g * h;
      if (gh.is_identity()) continue;
      if (auto s = cone->find(gh); s && *s == Sign::negative) {
        throw Error(ErrorKind::invalid_argument, "finite cone is not closed: " + g.str() + " and " +
                                                     h.str() + " positive but their product negative");
      }
    }
  }
  return cone;
}

ConePtr reverse_cone(const ConePtr& cone) {
  if (auto rev = std::dynamic_pointer_cast<const ReverseCone>(cone)) return rev->inner();
  return std::make_shared<ReverseCone>(cone);
}

ConePtr conjugate_cone(const ConePtr& cone, const Word& f) {
  cone->group()->check_member(f);
  if (f.is_identity()) return cone;
  // f (h P h^-1) f^-1 = (fh) P (fh)^-1
  if (auto conj = std::dynamic_pointer_cast<const ConjugateCone>(cone)) {
    const Word composite = f * conj->conjugator();
    if (composite.is_identity()) return conj->inner();
    return std::make_shared<ConjugateCone>(conj->inner(), composite);
  }
  return std::make_shared<ConjugateCone>(cone, f);
}

}  // namespace ordlat
