#pragma once

// Named, re-checkable claims. A certificate carries only strings, so it can be
// printed as records, read back and verified from its data alone.

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordlat/ball.hpp"

namespace ordlat {

struct Certificate {
  enum class Kind {
    cofinality_obstruction,
    basic_element,
    isolation_up_to_radius,
    orbit_membership_witness,
  };

  Kind kind = Kind::isolation_up_to_radius;
  std::string statement;
  // Ordered key/value pairs; keys are unique.
  std::vector<std::pair<std::string, std::string>> data;
  // Set when a hypothesis was assumed rather than established.
  bool tainted = false;

  void set(std::string key, std::string value);
  std::optional<std::string> get(std::string_view key) const;
  // Throws invalid_argument when the key is missing.
  const std::string& at(std::string_view key) const;

  // certificate.kind=..., certificate.statement=..., certificate.tainted=...,
  // then certificate.data.<key>=<value> lines.
  std::string records() const;
  std::string text() const;
  // Reads the certificate.* lines of a record stream; other lines are ignored.
  static Certificate parse_records(std::string_view text);
};

std::string_view to_string(Certificate::Kind kind);
Certificate::Kind parse_certificate_kind(std::string_view text);

struct VerificationResult {
  bool ok = false;
  std::string detail;
};

// Re-derives the claim from the certificate data: parses the group, cones and
// terms, and reruns the finite checks it rests on.
VerificationResult verify_certificate(const Certificate& certificate,
                                      std::size_t cap = default_cap);

}  // namespace ordlat
