#include "ordlat/certificate.hpp"

#include <charconv>

#include "ordlat/error.hpp"
#include "ordlat/lo_space.hpp"

namespace ordlat {

void Certificate::set(std::string key, std::string value) {
  for (auto& [k, v] : data) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  data.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Certificate::get(std::string_view key) const {
  for (const auto& [k, v] : data) {
    if (k == key) return v;
  }
  return std::nullopt;
}

const std::string& Certificate::at(std::string_view key) const {
  for (const auto& [k, v] : data) {
    if (k == key) return v;
  }
  throw Error(ErrorKind::invalid_argument, "certificate has no '" + std::string(key) + "' entry");
}

std::string Certificate::records() const {
  std::string out = "certificate.kind=" + std::string(to_string(kind)) + "\n";
  out += "certificate.statement=" + statement + "\n";
  out += std::string("certificate.tainted=") + (tainted ? "true" : "false") + "\n";
  for (const auto& [k, v] : data) out += "certificate.data." + k + "=" + v + "\n";
  return out;
}

std::string Certificate::text() const {
  std::string out = "certificate " + std::string(to_string(kind));
  if (tainted) out += " (tainted: cofinality assumed)";
  out += "\n  " + statement + "\n";
  for (const auto& [k, v] : data) out += "  " + k + ": " + v + "\n";
  return out;
}

Certificate Certificate::parse_records(std::string_view text) {
  Certificate cert;
  bool have_kind = false;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    constexpr std::string_view prefix = "certificate.";
    if (!line.starts_with(prefix)) continue;
    line.remove_prefix(prefix.size());
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::syntax, "certificate record without '=': " + std::string(line));
    }
    const std::string_view key = line.substr(0, eq);
    const std::string_view value = line.substr(eq + 1);
    if (key == "kind") {
      cert.kind = parse_certificate_kind(value);
      have_kind = true;
    } else if (key == "statement") {
      cert.statement = value;
    } else if (key == "tainted") {
      if (value != "true" && value != "false") {
        throw Error(ErrorKind::syntax, "certificate.tainted must be true or false");
      }
      cert.tainted = value == "true";
    } else if (key.starts_with("data.")) {
      cert.set(std::string(key.substr(5)), std::string(value));
    } else {
      throw Error(ErrorKind::syntax, "unknown certificate record '" + std::string(key) + "'");
    }
  }
  if (!have_kind) throw Error(ErrorKind::syntax, "no certificate.kind record found");
  return cert;
}

std::string_view to_string(Certificate::Kind kind) {
  switch (kind) {
    case Certificate::Kind::cofinality_obstruction: return "cofinality-obstruction";
    case Certificate::Kind::basic_element: return "basic-element";
    case Certificate::Kind::isolation_up_to_radius: return "isolation-up-to-radius";
    case Certificate::Kind::orbit_membership_witness: return "orbit-membership-witness";
  }
  return "?";
}

Certificate::Kind parse_certificate_kind(std::string_view text) {
  for (auto kind : {Certificate::Kind::cofinality_obstruction, Certificate::Kind::basic_element,
                    Certificate::Kind::isolation_up_to_radius,
                    Certificate::Kind::orbit_membership_witness}) {
    if (to_string(kind) == text) return kind;
  }
  throw Error(ErrorKind::syntax, "unknown certificate kind '" + std::string(text) + "'");
}

namespace {

int to_int(const std::string& text, std::string_view what) {
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size()) {
    throw Error(ErrorKind::syntax, "bad integer for " + std::string(what) + ": '" + text + "'");
  }
  return value;
}

std::vector<int> to_ints(const std::string& text, std::string_view what) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = std::min(text.find(',', start), text.size());
    out.push_back(to_int(text.substr(start, comma - start), what));
    start = comma + 1;
  }
  return out;
}

VerificationResult fail(std::string detail) { return {false, std::move(detail)}; }

VerificationResult verify_obstruction(const Certificate& c, std::size_t cap) {
  const GroupPtr group = make_group(c.at("group"));
  const ConePtr base = parse_cone(group, c.at("cone"));
  const ConePtr target = parse_cone(group, c.at("target"));
  const Word g = group->parse_word(c.at("element"));
  const LTerm term = parse_term(group, c.at("term"));
  const Word point = group->parse_word(c.at("point"));
  const int radius = to_int(c.at("radius"), "radius");
  const int bound = to_int(c.at("bound"), "bound");

  if (!structurally_equal(term, LTerm::meet(LTerm::element(g), LTerm::element(group->identity())))) {
    return fail("term is not " + g.str() + " /\\ 1");
  }
  if (!base->is_positive(g)) return fail(g.str() + " is not positive under " + base->spec());
  const bool known = is_known_cofinal(g);
  if (!known && !c.tainted) return fail(g.str() + " is not known-cofinal and the certificate is untainted");
  const CofinalReport report = is_cofinal_on_ball(*base, g, radius, bound, cap);
  if (!report.cofinal_up_to()) return fail("cofinality check fails at h = " + report.first_failure()->str());
  const Word image = evaluate(*target, term, point).output;
  if (image == point) return fail("the term fixes " + point.str() + " under " + target->spec());
  return {true, "term lies in ker(pi_P) and moves " + point.str() + " to " + image.str() + " under " +
                    target->spec()};
}

VerificationResult verify_basic(const Certificate& c) {
  const GroupPtr group = make_group(c.at("group"));
  const FiniteLoSpace space = complete_lo_space(group);
  const LTerm term = parse_term(group, c.at("term"));
  const BasicVerdict verdict = basic_element_check(term, space);
  if (verdict.kind != BasicVerdict::Kind::basic) {
    return fail("verdict is " + std::string(to_string(verdict.kind)));
  }
  const std::string unique = space.cones()[verdict.raising.front()]->spec();
  if (unique != c.at("cone")) return fail("the raising cone is " + unique + ", not " + c.at("cone"));
  return {true, "basic over all " + std::to_string(space.size()) + " cones, raised only by " + unique};
}

VerificationResult verify_isolation(const Certificate& c, std::size_t cap) {
  const GroupPtr group = make_group(c.at("group"));
  const OpenSetSpec spec = OpenSetSpec::parse(group, c.at("open_set"));
  const std::vector<int> radii = to_ints(c.at("radii"), "radii");
  EnumerationOptions options;
  options.cap = cap;
  const IsolationScan scan = isolated_scan(group, spec, radii, options);
  if (scan.outcome != IsolationScan::Outcome::certified) {
    return fail("scan outcome is " + std::string(to_string(scan.outcome)));
  }
  return {true, "one extension at every radius in {" + c.at("radii") + "}"};
}

VerificationResult verify_orbit(const Certificate& c, std::size_t cap) {
  const GroupPtr group = make_group(c.at("group"));
  const ConePtr base = parse_cone(group, c.at("base"));
  const ConePtr target = parse_cone(group, c.at("target"));
  const Word f = group->parse_word(c.at("conjugator"));
  const int radius = to_int(c.at("radius"), "radius");
  const BallPtr ball = make_ball(group, radius, cap);
  const ConePtr moved = conjugate_cone(base, f);
  for (std::size_t i = 1; i < ball->size(); ++i) {
    const Word& w = (*ball)[i];
    if (moved->sign(w) != target->sign(w)) return fail("signs differ at " + w.str());
  }
  return {true, "f P f^-1 and Q agree on all " + std::to_string(ball->size() - 1) +
                    " nonidentity elements of ball(" + std::to_string(radius) + ")"};
}

}  // namespace

VerificationResult verify_certificate(const Certificate& certificate, std::size_t cap) {
  try {
    switch (certificate.kind) {
      case Certificate::Kind::cofinality_obstruction: return verify_obstruction(certificate, cap);
      case Certificate::Kind::basic_element: return verify_basic(certificate);
      case Certificate::Kind::isolation_up_to_radius: return verify_isolation(certificate, cap);
      case Certificate::Kind::orbit_membership_witness: return verify_orbit(certificate, cap);
    }
  } catch (const Error& e) {
    return fail(e.what());
  }
  return fail("unknown certificate kind");
}

}  // namespace ordlat
