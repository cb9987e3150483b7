#pragma once

// Terms of the free lattice-ordered group F(G): group elements combined with
// product, inverse, join (\/) and meet (/\).
//
// Grammar (whitespace ignored, binary operators left-associative):
//   join    := meet ('\/' meet)*
//   meet    := product ('/\' product)*
//   product := power ('*' power)*
//   power   := atom ('^' '-'? integer)?
//   atom    := generator | '1' | '(' join ')'
// The parser folds products of two group elements into one element leaf, and
// a generator raised to a power is a single leaf. A parenthesised term raised
// to -1 becomes an Inv node.

#include <memory>
#include <string>
#include <string_view>

#include "ordlat/group.hpp"

namespace ordlat {

enum class TermKind { element, mul, inv, join, meet };

class LTerm {
 public:
  static LTerm element(Word w);
  static LTerm mul(LTerm a, LTerm b);
  static LTerm inv(LTerm a);
  static LTerm join(LTerm a, LTerm b);
  static LTerm meet(LTerm a, LTerm b);

  TermKind kind() const noexcept;
  const GroupPtr& group() const noexcept;
  // Element leaves only.
  const Word& word() const;
  // First operand; the only operand of Inv.
  const LTerm& left() const;
  const LTerm& right() const;

  std::size_t depth() const noexcept;
  std::size_t node_count() const noexcept;

  // Printing uses the minimal parentheses the grammar needs, so
  // parse_term(t.str()) reproduces any term the parser produced.
  std::string str() const;

  friend bool structurally_equal(const LTerm& a, const LTerm& b);

  struct Node;

 private:
  explicit LTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

LTerm parse_term(const GroupPtr& group, std::string_view text);

}  // namespace ordlat
