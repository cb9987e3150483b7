#include "ordlat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "ordlat/error.hpp"
#include "ordlat/lo_space.hpp"

#ifndef ORDLAT_VERSION
#define ORDLAT_VERSION "unknown"
#endif

namespace ordlat::cli {

namespace {

class Printer {
 public:
  Printer(std::ostream& out, bool records) : out_(out), records_(records) {}

  // Human-readable lines are dropped in records mode.
  void text(const std::string& line) {
    if (!records_) out_ << line << '\n';
  }
  template <typename T>
  void kv(std::string_view key, const T& value) {
    out_ << key << '=' << value << '\n';
  }
  void certificate(const Certificate& c) { out_ << (records_ ? c.records() : c.text()); }

 private:
  std::ostream& out_;
  bool records_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string join(const std::vector<std::string>& items, std::string_view sep) {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out;
}

class Context {
 public:
  Context(const RunConfig& config, Printer& printer) : cfg(config), p(printer) {}

  const GroupPtr& group() {
    if (!group_) {
      if (cfg.group.empty()) throw Error(ErrorKind::invalid_argument, "--group is required");
      group_ = make_group(cfg.group);
    }
    return group_;
  }

  ConePtr cone(std::size_t k = 0) {
    if (cfg.cones.size() <= k) {
      throw Error(ErrorKind::invalid_argument,
                  k == 0 ? "--cone is required" : "this command needs " + std::to_string(k + 1) + " cones");
    }
    return parse_cone(group(), cfg.cones[k]);
  }

  std::vector<ConePtr> cones() {
    std::vector<ConePtr> out;
    for (const auto& spec : cfg.cones) out.push_back(parse_cone(group(), spec));
    return out;
  }

  // --target, or the second --cone.
  ConePtr target() {
    if (!cfg.target.empty()) return parse_cone(group(), cfg.target);
    if (cfg.cones.size() >= 2) return cone(1);
    throw Error(ErrorKind::invalid_argument, "--target is required");
  }

  // Inline terms, or '@file' with one term per line.
  std::vector<LTerm> terms() {
    std::vector<LTerm> out;
    for (const auto& item : cfg.terms) {
      if (!item.starts_with('@')) {
        out.push_back(parse_term(group(), item));
        continue;
      }
      std::stringstream in(read_file(item.substr(1)));
      std::string line;
      while (std::getline(in, line)) {
        if (line.empty() || line.front() == '#') continue;
        out.push_back(parse_term(group(), line));
      }
    }
    if (out.empty()) throw Error(ErrorKind::invalid_argument, "--term is required");
    return out;
  }

  LTerm term() { return terms().front(); }

  Word word(const std::string& text, std::string_view flag) {
    if (text.empty()) throw Error(ErrorKind::invalid_argument, std::string(flag) + " is required");
    return group()->parse_word(text);
  }

  EnumerationOptions enumeration() const {
    EnumerationOptions o;
    o.cap = cfg.cap;
    o.limit = cfg.limit;
    o.threads = cfg.threads;
    return o;
  }

  const RunConfig& cfg;
  Printer& p;

 private:
  GroupPtr group_;
};

std::string generator_signs(const FiniteConeAssignment& a) {
  const GroupPtr& g = a.ball().group();
  std::vector<std::string> parts;
  for (int i = 1; i <= g->rank(); ++i) {
    parts.push_back(std::string(1, symbol(a.sign(g->generator(i)))) + g->generator_name(i));
  }
  return join(parts, ",");
}

void print_assignments(Context& c, const std::vector<FiniteConeAssignment>& found) {
  for (std::size_t k = 0; k < found.size(); ++k) {
    const auto& a = found[k];
    const std::string prefix = "cone." + std::to_string(k);
    c.p.text("  [" + std::to_string(k) + "] generators " + generator_signs(a));
    c.p.kv(prefix + ".generators", generator_signs(a));
    if (c.cfg.list) c.p.kv(prefix + ".signature", a.signature());
  }
}

int cmd_enumerate(Context& c) {
  const auto ball = make_ball(c.group(), c.cfg.radius, c.cfg.cap);
  const auto found = enumerate_finite_cones(ball, {}, c.enumeration());
  c.p.text("consistent sign assignments on ball(" + std::to_string(c.cfg.radius) + ") of " +
           c.group()->spec() + " (" + std::to_string(ball->size()) + " elements)");
  c.p.kv("group", c.group()->spec());
  c.p.kv("radius", c.cfg.radius);
  c.p.kv("ball_size", ball->size());
  c.p.kv("count", found.size());
  if (c.cfg.limit != 0 && found.size() == c.cfg.limit) c.p.kv("truncated", "true");
  print_assignments(c, found);
  return exit_ok;
}

OpenSetSpec open_set(Context& c) {
  if (c.cfg.open_set.empty()) throw Error(ErrorKind::invalid_argument, "--open-set is required");
  return OpenSetSpec::parse(c.group(), c.cfg.open_set);
}

int cmd_open_set(Context& c) {
  const OpenSetSpec spec = open_set(c);
  const auto found = cones_in_open_set(c.group(), spec, c.cfg.radius, c.enumeration());
  c.p.text("assignments on ball(" + std::to_string(c.cfg.radius) + ") inside U = {" + spec.str() + "}");
  c.p.kv("open_set", spec.str());
  c.p.kv("radius", c.cfg.radius);
  c.p.kv("count", found.size());
  print_assignments(c, found);
  return exit_ok;
}

int cmd_isolated_scan(Context& c) {
  const OpenSetSpec spec = open_set(c);
  std::vector<int> radii = c.cfg.radii;
  if (radii.empty()) {
    for (int r = 1; r <= c.cfg.radius; ++r) radii.push_back(r);
  }
  const IsolationScan scan = isolated_scan(c.group(), spec, radii, c.enumeration());
  c.p.kv("outcome", to_string(scan.outcome));
  for (std::size_t i = 0; i < scan.counts.size(); ++i) {
    c.p.kv("count.r" + std::to_string(scan.radii[i]), scan.counts[i] >= 2 ? std::string(">=2")
                                                                         : std::to_string(scan.counts[i]));
  }
  if (scan.certificate) c.p.certificate(*scan.certificate);
  if (scan.outcome == IsolationScan::Outcome::refuted) {
    c.p.text("two distinct extensions at radius " + std::to_string(*scan.refuting_radius) + ":");
    c.p.kv("refuting_radius", *scan.refuting_radius);
    for (std::size_t k = 0; k < scan.witnesses.size(); ++k) {
      const auto& w = scan.witnesses[k];
      c.p.text("  [" + std::to_string(k) + "] generators " + generator_signs(w));
      c.p.kv("witness." + std::to_string(k) + ".signature", w.signature());
    }
  }
  if (scan.outcome == IsolationScan::Outcome::empty) {
    c.p.text("no consistent assignment: the open set is empty at radius " + std::to_string(scan.radii.back()));
  }
  return exit_ok;
}

void emit_dot(Context& c, const ConePtr& base, const OrbitReport& report) {
  const auto ball = make_ball(c.group(), report.radius, c.cfg.cap);
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < report.points.size(); ++k) index[report.points[k].restriction.signature()] = k;
  std::ofstream dot(c.cfg.emit_dot);
  if (!dot) throw Error(ErrorKind::io, "cannot write " + c.cfg.emit_dot);
  dot << "digraph orbit {\n";
  for (std::size_t k = 0; k < report.points.size(); ++k) {
    dot << "  p" << k << " [label=\"" << report.points[k].conjugator.str() << "\"];\n";
  }
  for (std::size_t k = 0; k < report.points.size(); ++k) {
    for (int i = 1; i <= c.group()->rank(); ++i) {
      const Word x = c.group()->generator(i);
      const Word f = x * report.points[k].conjugator;
      const auto sig = restrict_cone(*conjugate_cone(base, f), ball).signature();
      const auto it = index.find(sig);
      if (it == index.end()) continue;
      dot << "  p" << k << " -> p" << it->second << " [label=\"" << x.str() << "\"];\n";
    }
  }
  dot << "}\n";
}

int cmd_orbit(Context& c) {
  const ConePtr base = c.cone();
  const OrbitReport report = orbit_points(base, c.cfg.conj_radius, c.cfg.radius, c.cfg.cap);
  c.p.text("restrictions to ball(" + std::to_string(report.radius) + ") of f P f^-1, f in ball(" +
           std::to_string(report.conj_radius) + ")");
  c.p.kv("base", report.base);
  c.p.kv("conj_radius", report.conj_radius);
  c.p.kv("radius", report.radius);
  c.p.kv("count", report.points.size());
  for (std::size_t k = 0; k < report.points.size(); ++k) {
    const auto& pt = report.points[k];
    c.p.text("  [" + std::to_string(k) + "] f = " + pt.conjugator.str() + "  generators " +
             generator_signs(pt.restriction));
    c.p.kv("point." + std::to_string(k) + ".conjugator", pt.conjugator.str());
    c.p.kv("point." + std::to_string(k) + ".signature", pt.restriction.signature());
  }
  if (!c.cfg.emit_dot.empty()) emit_dot(c, base, report);
  return exit_ok;
}

int cmd_orbit_contains(Context& c) {
  const ConePtr base = c.cone();
  const ConePtr target = c.target();
  const OrbitSearch search =
      orbit_closure_contains(target, base, c.cfg.radius, c.cfg.conj_radius, c.cfg.cap);
  c.p.kv("found", search.found() ? "true" : "false");
  if (search.found()) {
    c.p.kv("f", search.conjugator->str());
    c.p.certificate(*search.certificate);
    return exit_ok;
  }
  c.p.text("no conjugator in ball(" + std::to_string(search.conj_radius) + ") matches on ball(" +
           std::to_string(search.radius) + "); inconclusive");
  c.p.kv("conj_radius", search.conj_radius);
  return exit_inconclusive;
}

void print_verdict(Context& c, std::string_view prefix, const KernelVerdict& v) {
  const std::string key(prefix);
  if (v.trivial()) {
    c.p.kv(key + ".verdict", "trivial-up-to(" + std::to_string(v.radius) + ")");
  } else {
    c.p.kv(key + ".verdict", "proof-nontrivial");
    c.p.kv(key + ".moved", v.moved->str());
    c.p.kv(key + ".image", v.image->str());
  }
}

int cmd_kernel_falsify(Context& c) {
  const ConePtr base = c.cone();
  const ConePtr target = c.target();
  const auto terms = c.terms();
  const auto result =
      kernel_containment_falsifier(base, target, terms, c.cfg.radius, c.cfg.assume_cofinal, c.cfg.cap);
  if (!result) {
    c.p.text("no term in the family separates the kernels on ball(" + std::to_string(c.cfg.radius) +
             "); inconclusive");
    c.p.kv("found", "false");
    return exit_inconclusive;
  }
  c.p.kv("found", "true");
  c.p.kv("term", result->term.str());
  print_verdict(c, "base", result->under_base);
  print_verdict(c, "target", result->under_target);
  if (result->certificate) {
    c.p.certificate(*result->certificate);
    return exit_ok;
  }
  c.p.text("evidence only: triviality under the base cone is known up to radius " +
           std::to_string(c.cfg.radius));
  c.p.kv("evidence", "radius-" + std::to_string(c.cfg.radius));
  return exit_inconclusive;
}

int cmd_cofinal_obstruction(Context& c) {
  const ConePtr cone = c.cone();
  const Word g = c.word(c.cfg.element, "--element");
  const ObstructionResult result =
      cofinal_obstruction(cone, g, c.cfg.radius, c.cfg.bound, c.cfg.assume_cofinal, c.cfg.cap);
  c.p.kv("element", result.report.element.str());
  c.p.kv("cofinal_on_ball", result.report.cofinal_up_to() ? "true" : "false");
  if (result.certificate) {
    c.p.certificate(*result.certificate);
    return exit_ok;
  }
  c.p.text("no certificate: " + result.reason);
  c.p.kv("certificate", "none");
  return exit_inconclusive;
}

int cmd_tararin_conjugator(Context& c) {
  if (c.cfg.from.empty() || c.cfg.to.empty()) {
    throw Error(ErrorKind::invalid_argument, "--from and --to are required");
  }
  const SignSequence from = SignSequence::parse(c.cfg.from);
  const SignSequence to = SignSequence::parse(c.cfg.to);
  const int n = c.cfg.n > 0 ? c.cfg.n : static_cast<int>(std::max(from.size(), to.size()));
  const Word g = tararin_conjugator(c.group(), from, to, n);
  const std::size_t mismatches = tararin_conjugator_mismatches(c.group(), from, to, n, g, 3);
  c.p.kv("g", g.str());
  c.p.kv("mismatches.r3", mismatches);
  if (mismatches != 0) throw Error(ErrorKind::internal, "conjugator fails its own check");
  return exit_ok;
}

int cmd_minimal_sets(Context& c) {
  const FiniteLoSpace space = complete_lo_space(c.group());
  const int s = c.cfg.conj_radius;
  const InvariantSetReport report = minimal_invariant_sets(space, s, c.cfg.cap);
  c.p.kv("lo_size", space.size());
  c.p.kv("orbits", report.orbits.size());
  for (std::size_t k = 0; k < report.orbits.size(); ++k) {
    std::vector<std::string> members;
    for (std::size_t i : report.orbits[k]) members.push_back(space.cones()[i]->spec());
    c.p.text("  orbit " + std::to_string(k) + " (" + std::to_string(members.size()) + "): " + join(members, " "));
    c.p.kv("orbit." + std::to_string(k) + ".size", members.size());
    c.p.kv("orbit." + std::to_string(k) + ".members", join(members, ";"));
  }
  c.p.kv("verified", report.verified ? "true" : "false");
  return exit_ok;
}

int cmd_finite_check(Context& c) {
  const FiniteLoSpace space = complete_lo_space(c.group());
  const FiniteSpaceReport report = finite_or_uncountable_check(space);
  c.p.text("LO(" + c.group()->spec() + ") is finite; every point is isolated");
  c.p.kv("lo_size", report.size);
  for (std::size_t k = 0; k < report.size; ++k) {
    c.p.kv("cone." + std::to_string(k) + ".spec", space.cones()[k]->spec());
    c.p.kv("cone." + std::to_string(k) + ".isolating_set", report.isolating_sets[k].str());
  }
  return exit_ok;
}

int cmd_eval(Context& c) {
  const ConePtr cone = c.cone();
  const LTerm term = c.term();
  const Word h = c.group()->parse_word(c.cfg.point);
  const JoinMeetForm form = normalize(term);
  const EvalResult r = evaluate(*cone, form, h);
  const Word& g = form.rows[*r.row][*r.col];
  c.p.text(h.str() + " -> " + g.str() + "*" + h.str() + " [row " + std::to_string(*r.row) + ", col " +
           std::to_string(*r.col) + "]");
  c.p.kv("point", h.str());
  c.p.kv("output", r.output.str());
  c.p.kv("row", *r.row);
  c.p.kv("col", *r.col);
  c.p.kv("entry", g.str());
  return exit_ok;
}

int cmd_normalize(Context& c) {
  const JoinMeetForm form = normalize(c.term());
  c.p.kv("form", form.str());
  c.p.kv("rows", form.rows.size());
  c.p.kv("entries", form.entry_count());
  return exit_ok;
}

std::vector<ConePtr> witness_cones(Context& c) {
  if (!c.cfg.cones.empty()) return c.cones();
  if (has_finite_lo_space(*c.group())) return complete_lo_space(c.group()).cones();
  throw Error(ErrorKind::invalid_argument, "--cone is required for " + c.group()->spec());
}

int cmd_nontrivial_witness(Context& c) {
  const LTerm term = c.term();
  const auto cones = witness_cones(c);
  const auto w = nontriviality_witness(term, cones, c.cfg.radius, c.cfg.cap);
  if (!w) {
    c.p.text("every point of ball(" + std::to_string(c.cfg.radius) + ") is fixed under all " +
             std::to_string(cones.size()) + " cones; inconclusive");
    c.p.kv("found", "false");
    return exit_inconclusive;
  }
  c.p.kv("found", "true");
  c.p.kv("cone", w->cone->spec());
  c.p.kv("point", w->point.str());
  c.p.kv("image", w->image.str());
  return exit_ok;
}

int cmd_basic_check(Context& c) {
  const LTerm term = c.term();
  const FiniteLoSpace space = complete_lo_space(c.group());
  const BasicVerdict v = basic_element_check(term, space);
  c.p.kv("verdict", to_string(v.kind));
  c.p.kv("lo_size", space.size());
  c.p.kv("raising", v.raising.size());
  c.p.kv("lowering", v.lowering.size());
  for (std::size_t i : v.raising) c.p.text("  raised by " + space.cones()[i]->spec());
  for (std::size_t i : v.lowering) c.p.text("  lowered by " + space.cones()[i]->spec());
  if (const auto cert = basic_element_certificate(term, space)) c.p.certificate(*cert);
  return exit_ok;
}

int cmd_conradian(Context& c) {
  const ConradianReport r = is_conradian_on_ball(*c.cone(), c.cfg.radius, c.cfg.exponent, c.cfg.cap);
  c.p.kv("pairs_checked", r.pairs_checked);
  c.p.kv("violations", r.violations.size());
  if (!r.violations.empty()) {
    c.p.kv("first_violation", r.violations.front().first.str() + "," + r.violations.front().second.str());
  }
  c.p.kv("conradian_up_to_radius", r.conradian_up_to_radius() ? "true" : "false");
  return exit_ok;
}

int cmd_cofinal(Context& c) {
  const ConePtr cone = c.cone();
  const CofinalReport r = is_cofinal_on_ball(*cone, c.word(c.cfg.element, "--element"), c.cfg.radius,
                                             c.cfg.bound, c.cfg.cap);
  c.p.kv("element", r.element.str());
  c.p.kv("checked", r.entries.size());
  c.p.kv("cofinal_up_to", r.cofinal_up_to() ? "true" : "false");
  if (const auto f = r.first_failure()) c.p.kv("first_failure", f->str());
  return exit_ok;
}

int cmd_verify(Context& c) {
  if (c.cfg.certificate.empty()) throw Error(ErrorKind::invalid_argument, "--certificate is required");
  std::string text;
  if (c.cfg.certificate == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    text = buffer.str();
  } else {
    text = read_file(c.cfg.certificate);
  }
  const Certificate cert = Certificate::parse_records(text);
  const VerificationResult r = verify_certificate(cert, c.cfg.cap);
  c.p.kv("kind", to_string(cert.kind));
  c.p.kv("valid", r.ok ? "true" : "false");
  c.p.kv("detail", r.detail);
  return r.ok ? exit_ok : exit_error;
}

int cmd_check_axioms(Context& c) {
  AxiomOptions options;
  options.samples = c.cfg.samples;
  options.bi = c.cfg.bi;
  options.right_samples = c.cfg.samples;
  options.seed = c.cfg.seed;
  options.cap = c.cfg.cap;
  const AxiomReport r = check_order_axioms(*c.cone(), c.cfg.radius, options);
  c.p.kv("ball_size", r.ball_size);
  c.p.kv("pairs_checked", r.pairs_checked);
  c.p.kv("triples_checked", r.triples_checked);
  if (options.bi) c.p.kv("right_triples_checked", r.right_triples_checked);
  c.p.kv("violations", r.violations.size());
  for (const auto& v : r.violations) {
    std::vector<std::string> words;
    for (const auto& w : v.elements) words.push_back(w.str());
    c.p.text("  " + v.axiom + ": " + join(words, ", "));
  }
  return exit_ok;
}

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> options;
  std::function<int(Context&)> handler;
};

const std::vector<Command>& commands() {
  static const std::vector<Command> list = {
      {"enumerate-cones", "consistent sign assignments on a ball", {"group", "radius", "limit", "list"}, cmd_enumerate},
      {"open-set", "assignments inside U_{g_1} cap ... cap U_{g_n}", {"group", "radius", "open-set", "limit", "list"}, cmd_open_set},
      {"isolated-scan", "isolation certificate or refutation over a radius schedule", {"group", "radius", "radii", "open-set"}, cmd_isolated_scan},
      {"orbit", "distinct restrictions of conjugates of a cone", {"group", "cone", "radius", "conj-radius", "emit-dot"}, cmd_orbit},
      {"orbit-contains", "search for a conjugate agreeing with a target cone", {"group", "cone", "target", "radius", "conj-radius"}, cmd_orbit_contains},
      {"kernel-falsify", "term trivial under one cone and not under another", {"group", "cone", "target", "term", "radius", "assume-cofinal"}, cmd_kernel_falsify},
      {"cofinal-obstruction", "certificate that rev(P) is not in the orbit closure of P", {"group", "cone", "element", "radius", "bound", "assume-cofinal"}, cmd_cofinal_obstruction},
      {"tararin-conjugator", "conjugator matching two Tararin cones on <x_1..x_n>", {"group", "from", "to", "n"}, cmd_tararin_conjugator},
      {"minimal-sets", "conjugation orbits of a complete finite LO space", {"group", "conj-radius"}, cmd_minimal_sets},
      {"finite-check", "size and isolating sets of a complete finite LO space", {"group"}, cmd_finite_check},
      {"eval-term", "evaluate pi_P(t)(h)", {"group", "cone", "term", "point"}, cmd_eval},
      {"normalize-term", "join-of-meets form of a term", {"group", "term"}, cmd_normalize},
      {"nontrivial-witness", "search cones and ball points for a moved point", {"group", "cone", "term", "radius"}, cmd_nontrivial_witness},
      {"basic-check", "basic-element test over a complete finite LO space", {"group", "term"}, cmd_basic_check},
      {"conradian-check", "h*g^k > g for positive g, h on a ball", {"group", "cone", "radius", "exponent"}, cmd_conradian},
      {"cofinal-check", "g^-n < h < g^n for every h on a ball", {"group", "cone", "element", "radius", "bound"}, cmd_cofinal},
      {"verify-certificate", "re-check a certificate from its records", {"certificate"}, cmd_verify},
      {"check-axioms", "ordering axioms of a cone on a ball", {"group", "cone", "radius", "samples", "bi"}, cmd_check_axioms},
  };
  return list;
}

void add_command_option(CLI::App* sub, const std::string& name, RunConfig& cfg) {
  if (name == "group") sub->add_option("--group,-g", cfg.group, "group spec, e.g. tararin:n=2, braid:n=3");
  else if (name == "cone") sub->add_option("--cone,-c", cfg.cones, "cone spec (repeatable)");
  else if (name == "target") sub->add_option("--target", cfg.target, "target cone spec");
  else if (name == "radius") sub->add_option("--radius,-r", cfg.radius, "ball radius");
  else if (name == "radii") sub->add_option("--radii", cfg.radii, "radius schedule")->delimiter(',');
  else if (name == "conj-radius") sub->add_option("--conj-radius,-s", cfg.conj_radius, "conjugator ball radius");
  else if (name == "limit") sub->add_option("--limit", cfg.limit, "stop after this many assignments");
  else if (name == "list") sub->add_flag("--list", cfg.list, "print full sign signatures");
  else if (name == "open-set") sub->add_option("--open-set", cfg.open_set, "comma-separated words");
  else if (name == "emit-dot") sub->add_option("--emit-dot", cfg.emit_dot, "write the orbit graph as DOT");
  else if (name == "term") sub->add_option("--term,-t", cfg.terms, "l-group term, or @file (repeatable)");
  else if (name == "assume-cofinal") sub->add_flag("--assume-cofinal", cfg.assume_cofinal, "treat the element as cofinal (taints certificates)");
  else if (name == "element") sub->add_option("--element,-e", cfg.element, "group element");
  else if (name == "bound") sub->add_option("--bound", cfg.bound, "largest exponent tried");
  else if (name == "from") sub->add_option("--from", cfg.from, "sign sequence, e.g. +,-,+");
  else if (name == "to") sub->add_option("--to", cfg.to, "sign sequence");
  else if (name == "n") sub->add_option("--n", cfg.n, "subgroup index");
  else if (name == "point") sub->add_option("--point,-p", cfg.point, "point h");
  else if (name == "exponent") sub->add_option("--exponent", cfg.exponent, "exponent k");
  else if (name == "samples") sub->add_option("--samples", cfg.samples, "sampled triples (0 = all)");
  else if (name == "bi") sub->add_flag("--bi", cfg.bi, "also check right-invariance");
  else if (name == "certificate") sub->add_option("--certificate", cfg.certificate, "records file, or - for stdin");
}

std::optional<std::string> find_config_path(int argc, const char* const* argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string_view arg = argv[i];
    if (arg == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (arg.starts_with("--config=")) return std::string(arg.substr(9));
  }
  return std::nullopt;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  try {
    if (const auto path = find_config_path(argc, argv)) cfg = load_config(*path);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_error;
  }

  CLI::App app{"ordlat: left orderings and free lattice-ordered groups", "ordlat"};
  app.set_version_flag("--version", "ordlat " ORDLAT_VERSION);
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; flags override it");
  auto* format = app.add_option("--format", cfg.format, "text or records")->check(CLI::IsMember({"text", "records"}));
  auto* cap = app.add_option("--cap", cfg.cap, "element/assignment cap (also ORDLAT_CAP)");
  app.add_option("--seed", cfg.seed, "seed for sampled checks");
  app.add_option("--threads", cfg.threads, "worker threads");
  (void)format;

  for (const auto& cmd : commands()) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    for (const auto& opt : cmd.options) add_command_option(sub, opt, cfg);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return exit_error;
  }

  if (cap->count() == 0) {
    if (const char* env = std::getenv("ORDLAT_CAP")) {
      try {
        cfg.cap = parse_config(std::string("cap=") + env, "ORDLAT_CAP").cap;
      } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return exit_error;
      }
    }
  }

  Printer printer(out, cfg.format == "records");
  Context context(cfg, printer);
  for (const auto& cmd : commands()) {
    if (!app.got_subcommand(cmd.name)) continue;
    try {
      return cmd.handler(context);
    } catch (const Error& e) {
      out.flush();
      err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
      return exit_error;
    } catch (const std::exception& e) {
      err << "error: " << e.what() << '\n';
      return exit_error;
    }
  }
  return exit_error;
}

}  // namespace ordlat::cli
