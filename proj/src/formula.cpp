#include "luk/formula.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace luk {

struct Formula::Node {
  FormulaKind kind;
  unsigned index = 0;  // Var
  Formula a;           // Not child / Implies lhs
  Formula b;           // Implies rhs
};

Formula Formula::bottom() {
  static const Formula instance(std::make_shared<const Node>(Node{FormulaKind::Bottom}));
  return instance;
}

Formula Formula::var(unsigned index) {
  if (index == 0) throw std::invalid_argument("variable index must be >= 1");
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Var, index}));
}

Formula Formula::negate(Formula f) {
  return Formula(std::make_shared<const Node>(Node{FormulaKind::Not, 0, std::move(f)}));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const Node>(
      Node{FormulaKind::Implies, 0, std::move(lhs), std::move(rhs)}));
}

FormulaKind Formula::kind() const { return node_->kind; }
unsigned Formula::var_index() const { return node_->index; }
const Formula& Formula::child() const { return node_->a; }
const Formula& Formula::lhs() const { return node_->a; }
const Formula& Formula::rhs() const { return node_->b; }

bool Formula::operator==(const Formula& other) const {
  const Node* p = node_.get();
  const Node* q = other.node_.get();
  if (p == q) return true;
  if (p == nullptr || q == nullptr) return false;
  if (p->kind != q->kind) return false;
  switch (p->kind) {
    case FormulaKind::Bottom:
      return true;
    case FormulaKind::Var:
      return p->index == q->index;
    case FormulaKind::Not:
      return p->a == q->a;
    case FormulaKind::Implies:
      return p->a == q->a && p->b == q->b;
  }
  return false;
}

Formula expand(Connective op) {
  if (op != Connective::Verum) throw std::invalid_argument("connective takes two operands");
  return Formula::negate(Formula::bottom());
}

Formula expand(Connective op, Formula a, Formula b) {
  switch (op) {
    case Connective::Verum:
      throw std::invalid_argument("verum takes no operands");
    case Connective::Or: {
      Formula forward = Formula::implies(a, b);
      return Formula::implies(std::move(forward), std::move(b));
    }
    case Connective::And:
      return Formula::negate(
          expand(Connective::Or, Formula::negate(std::move(a)), Formula::negate(std::move(b))));
    case Connective::Iff: {
      Formula forward = Formula::implies(a, b);
      Formula backward = Formula::implies(std::move(b), std::move(a));
      return expand(Connective::And, std::move(forward), std::move(backward));
    }
    case Connective::Oplus:
      return Formula::implies(Formula::negate(std::move(a)), std::move(b));
    case Connective::Odot:
      return Formula::negate(
          Formula::implies(std::move(a), Formula::negate(std::move(b))));
    case Connective::Ominus:
      return Formula::negate(Formula::implies(std::move(a), std::move(b)));
  }
  throw std::invalid_argument("unknown connective");
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
      position_(position) {}

namespace {

enum class Tok : std::uint8_t {
  Zero, One, Var, Not, Implies, Iff, And, Or, Oplus, Odot, Ominus, LParen, RParen, End
};

struct Token {
  Tok tok;
  unsigned var_index = 0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::End, 0, start};
      return;
    }
    char c = text_[pos_];
    switch (c) {
      case '0':
        ++pos_;
        current_ = {Tok::Zero, 0, start};
        return;
      case '1':
        ++pos_;
        current_ = {Tok::One, 0, start};
        return;
      case '~':
        ++pos_;
        current_ = {Tok::Not, 0, start};
        return;
      case ')':
        ++pos_;
        current_ = {Tok::RParen, 0, start};
        return;
      case '(':
        if (pos_ + 2 < text_.size() && text_[pos_ + 2] == ')') {
          char mid = text_[pos_ + 1];
          if (mid == '+' || mid == '.' || mid == '-') {
            pos_ += 3;
            current_ = {mid == '+' ? Tok::Oplus : mid == '.' ? Tok::Odot : Tok::Ominus, 0, start};
            return;
          }
        }
        ++pos_;
        current_ = {Tok::LParen, 0, start};
        return;
      case '-':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
          pos_ += 2;
          current_ = {Tok::Implies, 0, start};
          return;
        }
        throw ParseError("unknown token '-'", start);
      case '<':
        if (pos_ + 2 < text_.size() && text_[pos_ + 1] == '-' && text_[pos_ + 2] == '>') {
          pos_ += 3;
          current_ = {Tok::Iff, 0, start};
          return;
        }
        throw ParseError("unknown token '<'", start);
      case '/':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '\\') {
          pos_ += 2;
          current_ = {Tok::And, 0, start};
          return;
        }
        throw ParseError("unknown token '/'", start);
      case '\\':
        if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
          pos_ += 2;
          current_ = {Tok::Or, 0, start};
          return;
        }
        throw ParseError("unknown token '\\'", start);
      case 'X': {
        ++pos_;
        std::size_t digits = 0;
        unsigned long value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
          value = value * 10 + static_cast<unsigned long>(text_[pos_] - '0');
          if (value > 1'000'000'000UL) throw ParseError("variable index too large", start);
          ++pos_;
          ++digits;
        }
        if (digits == 0) throw ParseError("expected digits after 'X'", start);
        if (value == 0) throw ParseError("variable index must be >= 1", start);
        current_ = {Tok::Var, static_cast<unsigned>(value), start};
        return;
      }
      default:
        throw ParseError(std::string("unknown token '") + c + "'", start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_;
};

// Precedence climbing, tightest first:
//   atom, ~  |  (.) (-)  |  /\  |  (+) \/  |  -> <->
class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse() {
    Formula f = implication();
    const Token& t = lex_.peek();
    if (t.tok == Tok::RParen) throw ParseError("unbalanced ')'", t.pos);
    if (t.tok != Tok::End) throw ParseError("trailing input", t.pos);
    return f;
  }

 private:
  static constexpr std::size_t kMaxDepth = 10'000;

  struct DepthGuard {
    explicit DepthGuard(Parser& p) : parser(p) {
      if (++parser.depth_ > kMaxDepth) {
        throw ParseError("formula too deeply nested", parser.lex_.peek().pos);
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  Formula implication() {  // right-associative
    DepthGuard guard(*this);
    Formula left = disjunction();
    Tok t = lex_.peek().tok;
    if (t == Tok::Implies) {
      lex_.take();
      return Formula::implies(std::move(left), implication());
    }
    if (t == Tok::Iff) {
      lex_.take();
      return expand(Connective::Iff, std::move(left), implication());
    }
    return left;
  }

  Formula disjunction() {
    Formula left = conjunction();
    for (;;) {
      Tok t = lex_.peek().tok;
      if (t == Tok::Or) {
        lex_.take();
        left = expand(Connective::Or, std::move(left), conjunction());
      } else if (t == Tok::Oplus) {
        lex_.take();
        left = expand(Connective::Oplus, std::move(left), conjunction());
      } else {
        return left;
      }
    }
  }

  Formula conjunction() {
    Formula left = strong();
    while (lex_.peek().tok == Tok::And) {
      lex_.take();
      left = expand(Connective::And, std::move(left), strong());
    }
    return left;
  }

  Formula strong() {
    Formula left = unary();
    for (;;) {
      Tok t = lex_.peek().tok;
      if (t == Tok::Odot) {
        lex_.take();
        left = expand(Connective::Odot, std::move(left), unary());
      } else if (t == Tok::Ominus) {
        lex_.take();
        left = expand(Connective::Ominus, std::move(left), unary());
      } else {
        return left;
      }
    }
  }

  Formula unary() {
    DepthGuard guard(*this);
    if (lex_.peek().tok == Tok::Not) {
      lex_.take();
      return Formula::negate(unary());
    }
    return atom();
  }

  Formula atom() {
    Token t = lex_.take();
    switch (t.tok) {
      case Tok::Zero:
        return Formula::bottom();
      case Tok::One:
        return expand(Connective::Verum);
      case Tok::Var:
        return Formula::var(t.var_index);
      case Tok::LParen: {
        Formula f = implication();
        Token close = lex_.take();
        if (close.tok != Tok::RParen) throw ParseError("unbalanced '('", t.pos);
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("expected a formula", t.pos);
    }
  }

  Lexer lex_;
  std::size_t depth_ = 0;
};

void print_rec(const Formula& f, std::ostringstream& out) {
  switch (f.kind()) {
    case FormulaKind::Bottom:
      out << '0';
      return;
    case FormulaKind::Var:
      out << 'X' << f.var_index();
      return;
    case FormulaKind::Not:
      out << '~';
      if (f.child().kind() == FormulaKind::Implies) {
        out << '(';
        print_rec(f.child(), out);
        out << ')';
      } else {
        print_rec(f.child(), out);
      }
      return;
    case FormulaKind::Implies:
      // "->" is right-associative: parenthesise an implication on the left only.
      if (f.lhs().kind() == FormulaKind::Implies) {
        out << '(';
        print_rec(f.lhs(), out);
        out << ')';
      } else {
        print_rec(f.lhs(), out);
      }
      out << " -> ";
      print_rec(f.rhs(), out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse(); }

std::string print_formula(const Formula& f) {
  std::ostringstream out;
  print_rec(f, out);
  return out.str();
}

std::size_t tree_size(const Formula& f, std::size_t cap) {
  std::unordered_map<const void*, std::size_t> sizes;
  auto saturating = [cap](std::size_t a, std::size_t b) {
    return (a >= cap || b >= cap || a >= cap - b - 1) ? cap : a + b + 1;
  };
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    const Formula cur = stack.back();
    if (sizes.count(cur.node_id()) > 0) {
      stack.pop_back();
      continue;
    }
    switch (cur.kind()) {
      case FormulaKind::Bottom:
      case FormulaKind::Var:
        sizes.emplace(cur.node_id(), 1);
        break;
      case FormulaKind::Not: {
        auto it = sizes.find(cur.child().node_id());
        if (it == sizes.end()) {
          stack.push_back(cur.child());
          continue;
        }
        sizes.emplace(cur.node_id(), saturating(it->second, 0));
        break;
      }
      case FormulaKind::Implies: {
        auto l = sizes.find(cur.lhs().node_id());
        auto r = sizes.find(cur.rhs().node_id());
        if (l == sizes.end()) stack.push_back(cur.lhs());
        if (r == sizes.end()) stack.push_back(cur.rhs());
        if (l == sizes.end() || r == sizes.end()) continue;
        sizes.emplace(cur.node_id(), saturating(l->second, r->second));
        break;
      }
    }
    stack.pop_back();
  }
  return sizes.at(f.node_id());
}

std::vector<unsigned> variables(const Formula& f) {
  std::set<unsigned> vars;
  std::set<const void*> visited;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula cur = std::move(stack.back());
    stack.pop_back();
    if (!visited.insert(cur.node_id()).second) continue;
    switch (cur.kind()) {
      case FormulaKind::Bottom:
        break;
      case FormulaKind::Var:
        vars.insert(cur.var_index());
        break;
      case FormulaKind::Not:
        stack.push_back(cur.child());
        break;
      case FormulaKind::Implies:
        stack.push_back(cur.lhs());
        stack.push_back(cur.rhs());
        break;
    }
  }
  return {vars.begin(), vars.end()};
}

}  // namespace luk
