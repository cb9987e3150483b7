#include "ordlat/term.hpp"

#include <algorithm>
#include <vector>

#include "ordlat/detail/lexer.hpp"
#include "ordlat/error.hpp"

namespace ordlat {

struct LTerm::Node {
  TermKind kind;
  GroupPtr group;
  Word word;
  std::vector<LTerm> operands;
  std::size_t depth = 1;
  std::size_t count = 1;
};

namespace {

void check_same_group(const GroupPtr& a, const GroupPtr& b) {
  if (!a->same_as(*b)) {
    throw Error(ErrorKind::backend_mismatch, "term mixes " + a->spec() + " and " + b->spec());
  }
}

}  // namespace

LTerm LTerm::element(Word w) {
  if (!w.group()) throw Error(ErrorKind::invalid_argument, "null word in term");
  auto node = std::make_shared<Node>();
  node->kind = TermKind::element;
  node->group = w.group();
  node->word = std::move(w);
  return LTerm(std::move(node));
}

namespace {

std::shared_ptr<LTerm::Node> make_node(TermKind kind, std::vector<LTerm> operands) {
  auto node = std::make_shared<LTerm::Node>();
  node->kind = kind;
  node->group = operands.front().group();
  std::size_t depth = 0;
  std::size_t count = 1;
  for (const auto& op : operands) {
    check_same_group(node->group, op.group());
    depth = std::max(depth, op.depth());
    count += op.node_count();
  }
  node->depth = depth + 1;
  node->count = count;
  node->operands = std::move(operands);
  return node;
}

}  // namespace

LTerm LTerm::mul(LTerm a, LTerm b) { return LTerm(make_node(TermKind::mul, {std::move(a), std::move(b)})); }
LTerm LTerm::join(LTerm a, LTerm b) { return LTerm(make_node(TermKind::join, {std::move(a), std::move(b)})); }
LTerm LTerm::meet(LTerm a, LTerm b) { return LTerm(make_node(TermKind::meet, {std::move(a), std::move(b)})); }
LTerm LTerm::inv(LTerm a) { return LTerm(make_node(TermKind::inv, {std::move(a)})); }

TermKind LTerm::kind() const noexcept { return node_->kind; }
const GroupPtr& LTerm::group() const noexcept { return node_->group; }

const Word& LTerm::word() const {
  if (node_->kind != TermKind::element) throw Error(ErrorKind::invalid_argument, "not an element leaf");
  return node_->word;
}

const LTerm& LTerm::left() const {
  if (node_->operands.empty()) throw Error(ErrorKind::invalid_argument, "leaf has no operands");
  return node_->operands[0];
}

const LTerm& LTerm::right() const {
  if (node_->operands.size() < 2) throw Error(ErrorKind::invalid_argument, "term has no second operand");
  return node_->operands[1];
}

std::size_t LTerm::depth() const noexcept { return node_->depth; }
std::size_t LTerm::node_count() const noexcept { return node_->count; }

bool structurally_equal(const LTerm& a, const LTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::element: return a.word() == b.word();
    case TermKind::inv: return structurally_equal(a.left(), b.left());
    case TermKind::mul:
    case TermKind::join:
    case TermKind::meet:
      return structurally_equal(a.left(), b.left()) && structurally_equal(a.right(), b.right());
  }
  return false;
}

namespace {

constexpr int prec_join = 1;
constexpr int prec_meet = 2;
constexpr int prec_mul = 3;
constexpr int prec_atom = 4;

void print(const LTerm& t, int context, bool right_of_mul, std::string& out) {
  auto wrap = [&](int prec, auto&& body) {
    const bool parens = prec < context;
    if (parens) out += '(';
    body();
    if (parens) out += ')';
  };
  switch (t.kind()) {
    case TermKind::element: {
      const bool compound = t.word().syllables().size() > 1;
      const int prec = compound ? prec_mul : prec_atom;
      const bool parens = prec < context || (compound && right_of_mul);
      if (parens) out += '(';
      out += t.word().str();
      if (parens) out += ')';
      return;
    }
    case TermKind::inv:
      out += '(';
      print(t.left(), 0, false, out);
      out += ")^-1";
      return;
    case TermKind::mul:
      wrap(prec_mul, [&] {
        print(t.left(), prec_mul, false, out);
        out += '*';
        print(t.right(), prec_atom, true, out);
      });
      return;
    case TermKind::meet:
      wrap(prec_meet, [&] {
        print(t.left(), prec_meet, false, out);
        out += " /\\ ";
        print(t.right(), prec_mul, false, out);
      });
      return;
    case TermKind::join:
      wrap(prec_join, [&] {
        print(t.left(), prec_join, false, out);
        out += " \\/ ";
        print(t.right(), prec_meet, false, out);
      });
      return;
  }
}

using detail::Token;
using detail::TokenKind;

class TermParser {
 public:
  TermParser(const GroupPtr& group, std::string_view text)
      : group_(group), tokens_(detail::tokenize(text)) {}

  LTerm parse() {
    LTerm t = join();
    expect(TokenKind::end);
    return t;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }

  void expect(TokenKind kind) {
    if (peek().kind != kind) {
      throw SyntaxError("expected " + std::string(detail::describe(kind)) + ", found " +
                            std::string(detail::describe(peek().kind)),
                        peek().position);
    }
    ++pos_;
  }

  LTerm join() {
    LTerm t = meet();
    while (peek().kind == TokenKind::join) {
      ++pos_;
      t = LTerm::join(std::move(t), meet());
    }
    return t;
  }

  LTerm meet() {
    LTerm t = product();
    while (peek().kind == TokenKind::meet) {
      ++pos_;
      t = LTerm::meet(std::move(t), product());
    }
    return t;
  }

  static LTerm fold_mul(LTerm a, LTerm b) {
    if (a.kind() == TermKind::element && b.kind() == TermKind::element) {
      return LTerm::element(a.word() * b.word());
    }
    return LTerm::mul(std::move(a), std::move(b));
  }

  LTerm product() {
    LTerm t = power();
    while (peek().kind == TokenKind::star) {
      ++pos_;
      t = fold_mul(std::move(t), power());
    }
    return t;
  }

  LTerm power() {
    const bool parenthesised = peek().kind == TokenKind::lparen;
    LTerm t = atom();
    if (peek().kind != TokenKind::caret) return t;
    ++pos_;
    bool negative = false;
    if (peek().kind == TokenKind::minus) {
      negative = true;
      ++pos_;
    }
    const std::int64_t k = peek().value;
    expect(TokenKind::integer);
    if (!parenthesised) return LTerm::element(t.word().pow(negative ? -k : k));
    if (k == 0) return LTerm::element(group_->identity());
    LTerm base = negative ? LTerm::inv(t) : t;
    LTerm result = base;
    for (std::int64_t i = 1; i < k; ++i) result = fold_mul(std::move(result), base);
    return result;
  }

  LTerm atom() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::integer:
        if (t.value != 1) throw SyntaxError("only the integer 1 denotes an element", t.position);
        ++pos_;
        return LTerm::element(group_->identity());
      case TokenKind::name: {
        auto index = group_->generator_index(t.text);
        if (!index) {
          throw SyntaxError("unknown generator '" + t.text + "' for " + group_->spec(), t.position);
        }
        ++pos_;
        return LTerm::element(group_->generator(*index));
      }
      case TokenKind::lparen: {
        ++pos_;
        LTerm inner = join();
        expect(TokenKind::rparen);
        return inner;
      }
      default:
        throw SyntaxError("expected a generator, '1' or '(', found " +
                              std::string(detail::describe(t.kind)),
                          t.position);
    }
  }

  GroupPtr group_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string LTerm::str() const {
  std::string out;
  print(*this, 0, false, out);
  return out;
}

LTerm parse_term(const GroupPtr& group, std::string_view text) {
  if (!group) throw Error(ErrorKind::invalid_argument, "term needs a group");
  return TermParser(group, text).parse();
}

}  // namespace ordlat
