#include "plogic/sentence.hpp"

#include <cctype>
#include <stdexcept>

#include "plogic/errors.hpp"

namespace plogic {

struct Sentence::Node {
  Connective op;
  std::string name;
  std::vector<Sentence> operands;
};

Sentence Sentence::atom(std::string name) {
  if (!is_identifier(name)) throw std::invalid_argument("invalid atom name '" + name + "'");
  return Sentence(std::make_shared<const Node>(Node{Connective::atom, std::move(name), {}}));
}

Sentence Sentence::negation(Sentence child) {
  return Sentence(std::make_shared<const Node>(Node{Connective::negation, {}, {std::move(child)}}));
}

Sentence Sentence::binary(Connective op, Sentence left, Sentence right) {
  if (op == Connective::atom || op == Connective::negation)
    throw std::invalid_argument("binary sentence needs a binary connective");
  return Sentence(
      std::make_shared<const Node>(Node{op, {}, {std::move(left), std::move(right)}}));
}

Connective Sentence::connective() const { return node_->op; }
const std::string& Sentence::name() const { return node_->name; }

const Sentence& Sentence::left() const {
  if (node_->operands.empty()) throw std::logic_error("atom has no operands");
  return node_->operands.front();
}

const Sentence& Sentence::right() const {
  if (node_->operands.size() < 2) throw std::logic_error("sentence has no right operand");
  return node_->operands[1];
}

bool operator==(const Sentence& a, const Sentence& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->op != b.node_->op || a.node_->name != b.node_->name) return false;
  return a.node_->operands == b.node_->operands;
}

bool is_identifier(std::string_view name) {
  if (name.empty()) return false;
  auto head = static_cast<unsigned char>(name.front());
  if (!std::isalpha(head) && head != '_') return false;
  for (char c : name.substr(1)) {
    auto u = static_cast<unsigned char>(c);
    if (!std::isalnum(u) && u != '_') return false;
  }
  return true;
}

namespace {

enum class Token { ident, bang, amp, bar, arrow, biarrow, lparen, rparen, end };

const char* describe(Token t) {
  switch (t) {
    case Token::ident: return "identifier";
    case Token::bang: return "'!'";
    case Token::amp: return "'&'";
    case Token::bar: return "'|'";
    case Token::arrow: return "'->'";
    case Token::biarrow: return "'<->'";
    case Token::lparen: return "'('";
    case Token::rparen: return "')'";
    case Token::end: return "end of input";
  }
  return "?";
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  Sentence parse_all() {
    Sentence s = parse_iff();
    if (token_ != Token::end) fail(std::string("unexpected ") + describe(token_));
    return s;
  }

 private:
  Sentence parse_iff() {
    Sentence lhs = parse_implies();
    if (token_ == Token::biarrow) {
      advance();
      return iff(lhs, parse_iff());
    }
    return lhs;
  }

  Sentence parse_implies() {
    Sentence lhs = parse_or();
    if (token_ == Token::arrow) {
      advance();
      return implies(lhs, parse_implies());
    }
    return lhs;
  }

  Sentence parse_or() {
    Sentence lhs = parse_and();
    while (token_ == Token::bar) {
      advance();
      lhs = disj(lhs, parse_and());
    }
    return lhs;
  }

  Sentence parse_and() {
    Sentence lhs = parse_unary();
    while (token_ == Token::amp) {
      advance();
      lhs = conj(lhs, parse_unary());
    }
    return lhs;
  }

  Sentence parse_unary() {
    switch (token_) {
      case Token::bang:
        advance();
        return negate(parse_unary());
      case Token::lparen: {
        advance();
        Sentence inner = parse_iff();
        if (token_ != Token::rparen) fail(std::string("expected ')' but found ") + describe(token_));
        advance();
        return inner;
      }
      case Token::ident: {
        Sentence a = atom(std::string(lexeme_));
        advance();
        return a;
      }
      default:
        fail(std::string("expected a formula but found ") + describe(token_));
    }
  }

  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    start_ = pos_;
    if (pos_ >= text_.size()) {
      token_ = Token::end;
      return;
    }
    auto rest = text_.substr(pos_);
    auto take = [&](Token t, std::size_t len) {
      token_ = t;
      pos_ += len;
    };
    char c = rest.front();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t len = 1;
      while (len < rest.size() &&
             (std::isalnum(static_cast<unsigned char>(rest[len])) || rest[len] == '_'))
        ++len;
      lexeme_ = rest.substr(0, len);
      take(Token::ident, len);
    } else if (c == '!') {
      take(Token::bang, 1);
    } else if (c == '&') {
      take(Token::amp, 1);
    } else if (c == '|') {
      take(Token::bar, 1);
    } else if (c == '(') {
      take(Token::lparen, 1);
    } else if (c == ')') {
      take(Token::rparen, 1);
    } else if (rest.starts_with("->")) {
      take(Token::arrow, 2);
    } else if (rest.starts_with("<->")) {
      take(Token::biarrow, 3);
    } else if (rest.starts_with("⇒")) {
      take(Token::arrow, std::string_view("⇒").size());
    } else {
      fail(std::string("unexpected character '") + c + "'");
    }
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw SyntaxError("column " + std::to_string(start_ + 1) + ": " + message, start_);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t start_ = 0;
  Token token_ = Token::end;
  std::string_view lexeme_;
};

const char* symbol(Connective op) {
  switch (op) {
    case Connective::conjunction: return " & ";
    case Connective::disjunction: return " | ";
    case Connective::implication: return " -> ";
    case Connective::equivalence: return " <-> ";
    default: return "";
  }
}

void collect_atoms(const Sentence& s, std::vector<std::string>& out) {
  switch (s.connective()) {
    case Connective::atom:
      for (const auto& seen : out)
        if (seen == s.name()) return;
      out.push_back(s.name());
      return;
    case Connective::negation:
      collect_atoms(s.left(), out);
      return;
    default:
      collect_atoms(s.left(), out);
      collect_atoms(s.right(), out);
  }
}

bool apply(Connective op, bool a, bool b) {
  switch (op) {
    case Connective::conjunction: return a && b;
    case Connective::disjunction: return a || b;
    case Connective::implication: return !a || b;
    case Connective::equivalence: return a == b;
    default: throw std::logic_error("not a binary connective");
  }
}

}  // namespace

Sentence parse(std::string_view text) {
  bool blank = true;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
  if (blank) throw SyntaxError("empty formula", 0);
  return Parser(text).parse_all();
}

std::string to_text(const Sentence& s) {
  switch (s.connective()) {
    case Connective::atom:
      return s.name();
    case Connective::negation:
      return "(!" + to_text(s.left()) + ")";
    default:
      return "(" + to_text(s.left()) + symbol(s.connective()) + to_text(s.right()) + ")";
  }
}

bool evaluate(const Sentence& s, const Assignment& assignment) {
  switch (s.connective()) {
    case Connective::atom: {
      auto it = assignment.find(s.name());
      if (it == assignment.end()) throw std::out_of_range("no value for atom '" + s.name() + "'");
      return it->second;
    }
    case Connective::negation:
      return !evaluate(s.left(), assignment);
    default:
      return apply(s.connective(), evaluate(s.left(), assignment), evaluate(s.right(), assignment));
  }
}

std::vector<std::string> atoms_of(const Sentence& s) {
  std::vector<std::string> out;
  collect_atoms(s, out);
  return out;
}

AtomTable::AtomTable(std::span<const Sentence> sentences) {
  for (const auto& s : sentences)
    for (const auto& name : atoms_of(s)) add(name);
}

std::size_t AtomTable::add(const std::string& name) {
  auto [it, inserted] = index_.try_emplace(name, names_.size());
  if (inserted) names_.push_back(name);
  return it->second;
}

std::size_t AtomTable::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) throw std::out_of_range("unknown atom '" + std::string(name) + "'");
  return it->second;
}

bool AtomTable::contains(std::string_view name) const {
  return index_.contains(std::string(name));
}

namespace {

void compile(const Sentence& s, const AtomTable& atoms, auto& program) {
  switch (s.connective()) {
    case Connective::atom:
      program.push_back({Connective::atom, atoms.index_of(s.name())});
      return;
    case Connective::negation:
      compile(s.left(), atoms, program);
      program.push_back({Connective::negation, 0});
      return;
    default:
      compile(s.left(), atoms, program);
      compile(s.right(), atoms, program);
      program.push_back({s.connective(), 0});
  }
}

}  // namespace

CompiledSentence::CompiledSentence(const Sentence& s, const AtomTable& atoms) {
  compile(s, atoms, program_);
}

bool CompiledSentence::evaluate(std::span<const std::uint8_t> values) const {
  // Postfix stack machine; depth never exceeds the program length.
  std::vector<bool> stack;
  stack.reserve(program_.size());
  for (const auto& step : program_) {
    switch (step.op) {
      case Connective::atom:
        stack.push_back(values[step.atom] != 0);
        break;
      case Connective::negation:
        stack.back() = !stack.back();
        break;
      default: {
        bool rhs = stack.back();
        stack.pop_back();
        stack.back() = apply(step.op, stack.back(), rhs);
      }
    }
  }
  return stack.back();
}

}  // namespace plogic
