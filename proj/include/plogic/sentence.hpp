#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace plogic {

enum class Connective { atom, negation, conjunction, disjunction, implication, equivalence };

// Immutable propositional formula. Copies share structure.
class Sentence {
 public:
  static Sentence atom(std::string name);
  static Sentence negation(Sentence child);
  static Sentence binary(Connective op, Sentence left, Sentence right);

  Connective connective() const;
  bool is_atom() const { return connective() == Connective::atom; }

  // Atom name; empty for compound sentences.
  const std::string& name() const;
  // Operand of a negation, or left operand of a binary connective.
  const Sentence& left() const;
  const Sentence& right() const;

  friend bool operator==(const Sentence& a, const Sentence& b);

 private:
  struct Node;
  explicit Sentence(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

inline Sentence atom(std::string name) { return Sentence::atom(std::move(name)); }
inline Sentence negate(Sentence s) { return Sentence::negation(std::move(s)); }
inline Sentence conj(Sentence a, Sentence b) {
  return Sentence::binary(Connective::conjunction, std::move(a), std::move(b));
}
inline Sentence disj(Sentence a, Sentence b) {
  return Sentence::binary(Connective::disjunction, std::move(a), std::move(b));
}
inline Sentence implies(Sentence a, Sentence b) {
  return Sentence::binary(Connective::implication, std::move(a), std::move(b));
}
inline Sentence iff(Sentence a, Sentence b) {
  return Sentence::binary(Connective::equivalence, std::move(a), std::move(b));
}

bool is_identifier(std::string_view name);

// Grammar, loosest binding first:
//   <->  right-associative
//   ->   right-associative (the UTF-8 arrow "⇒" is an alias)
//   |    left-associative
//   &    left-associative
//   !    prefix
// Throws SyntaxError carrying the byte offset of the offending token.
Sentence parse(std::string_view text);

// Fully parenthesized; parse(to_text(s)) == s.
std::string to_text(const Sentence& s);

using Assignment = std::map<std::string, bool, std::less<>>;

// Throws std::out_of_range when an atom has no value in the assignment.
bool evaluate(const Sentence& s, const Assignment& assignment);

// Distinct atoms in order of first appearance.
std::vector<std::string> atoms_of(const Sentence& s);

// Distinct atom names ordered by first appearance across a sentence list.
class AtomTable {
 public:
  AtomTable() = default;
  explicit AtomTable(std::span<const Sentence> sentences);

  // Returns the index of `name`, appending it if new.
  std::size_t add(const std::string& name);
  // Throws std::out_of_range for unknown names.
  std::size_t index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Sentence flattened to postfix with atoms resolved against an AtomTable,
// for evaluating one sentence under many assignments.
class CompiledSentence {
 public:
  CompiledSentence(const Sentence& s, const AtomTable& atoms);

  // values[i] is the truth value (0 or 1) of atoms.names()[i].
  bool evaluate(std::span<const std::uint8_t> values) const;

 private:
  struct Step {
    Connective op;
    std::size_t atom;
  };
  std::vector<Step> program_;
};

}  // namespace plogic
