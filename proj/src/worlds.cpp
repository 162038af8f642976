#include "plogic/worlds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace plogic {

std::vector<Truth> Tableau::row(std::size_t sentence) const {
  if (sentence >= sentences.size()) throw std::out_of_range("sentence index out of range");
  std::vector<Truth> out;
  out.reserve(worlds.size());
  for (const auto& w : worlds) out.push_back(w[sentence]);
  return out;
}

bool Tableau::has_dc() const {
  for (const auto& w : worlds)
    if (std::find(w.begin(), w.end(), Truth::dc) != w.end()) return true;
  return false;
}

Tableau enumerate_worlds(const std::vector<Sentence>& sentences, std::size_t source_count,
                         std::size_t atom_cap) {
  if (source_count > sentences.size()) throw std::invalid_argument("source count exceeds sentence count");
  AtomTable atoms(sentences);
  const std::size_t k = atoms.size();
  if (k > atom_cap || k >= 63)
    throw std::length_error(std::to_string(k) + " atoms exceed the enumeration cap of " +
                            std::to_string(atom_cap));

  std::vector<CompiledSentence> compiled;
  compiled.reserve(sentences.size());
  for (const auto& s : sentences) compiled.emplace_back(s, atoms);

  Tableau t{sentences, {}, source_count};
  std::set<World> seen;
  std::vector<std::uint8_t> values(k);
  World w(sentences.size());
  const std::uint64_t count = std::uint64_t{1} << k;
  for (std::uint64_t step = 0; step < count; ++step) {
    const std::uint64_t mask = count - 1 - step;
    for (std::size_t i = 0; i < k; ++i) values[i] = (mask >> (k - 1 - i)) & 1U;
    for (std::size_t s = 0; s < compiled.size(); ++s)
      w[s] = compiled[s].evaluate(values) ? Truth::t : Truth::f;
    if (seen.insert(w).second) t.worlds.push_back(w);
  }
  return t;
}

Tableau conjunctive_mp_tableau(const std::vector<std::string>& antecedents,
                               const std::string& consequent) {
  const std::size_t n = antecedents.size();
  if (n < 1) throw std::invalid_argument("schema needs at least one antecedent");

  Tableau t;
  for (const auto& a : antecedents) t.sentences.push_back(atom(a));
  Sentence body = t.sentences.front();
  for (std::size_t i = 1; i < n; ++i) body = conj(body, t.sentences[i]);
  t.sentences.push_back(implies(body, atom(consequent)));
  t.sentences.push_back(atom(consequent));
  t.source_count = n + 1;

  const std::size_t implication = n;
  const std::size_t target = n + 1;

  World all_true(n + 2, Truth::t);
  t.worlds.push_back(all_true);

  World rule_broken(n + 2, Truth::t);
  rule_broken[implication] = Truth::f;
  rule_broken[target] = Truth::f;
  t.worlds.push_back(rule_broken);

  // Last conjunct first, matching the published matrix column order.
  for (std::size_t i = n; i-- > 0;) {
    World w(n + 2, Truth::dc);
    for (std::size_t j = 0; j < i; ++j) w[j] = Truth::t;
    w[i] = Truth::f;
    w[implication] = Truth::t;
    t.worlds.push_back(w);
  }
  return t;
}

Tableau conjunctive_mp_tableau(std::size_t n) {
  if (n < 1) throw std::invalid_argument("schema needs at least one antecedent");
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("A" + std::to_string(i));
  return conjunctive_mp_tableau(names, "B");
}

std::vector<World> expand_world(const World& w) {
  std::vector<World> out{w};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] != Truth::dc) continue;
    std::vector<World> next;
    next.reserve(out.size() * 2);
    for (auto& partial : out) {
      // f before t keeps the output in lexicographic order.
      partial[i] = Truth::f;
      next.push_back(partial);
      partial[i] = Truth::t;
      next.push_back(std::move(partial));
    }
    out = std::move(next);
  }
  return out;
}

namespace {

// Two three-valued worlds have overlapping expansions iff no position holds
// t in one and f in the other.
bool overlap(const World& a, const World& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Truth::dc || b[i] == Truth::dc) continue;
    if (a[i] != b[i]) return false;
  }
  return true;
}

}  // namespace

bool expansions_disjoint(const std::vector<World>& worlds) {
  for (std::size_t i = 0; i < worlds.size(); ++i)
    for (std::size_t j = i + 1; j < worlds.size(); ++j)
      if (overlap(worlds[i], worlds[j])) return false;
  return true;
}

Tableau expand_tableau(const Tableau& t) {
  if (!expansions_disjoint(t.worlds))
    throw std::invalid_argument("tableau worlds have overlapping expansions");
  Tableau out{t.sentences, {}, t.source_count};
  for (const auto& w : t.worlds)
    for (auto& e : expand_world(w)) out.worlds.push_back(std::move(e));
  return out;
}

bool same_world_set(std::vector<World> a, std::vector<World> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  b.erase(std::unique(b.begin(), b.end()), b.end());
  return a == b;
}

char truth_char(Truth v) {
  switch (v) {
    case Truth::t: return '1';
    case Truth::f: return '0';
    case Truth::dc: return '*';
  }
  return '?';
}

std::string render_tableau(const Tableau& t) {
  std::vector<std::string> labels;
  std::size_t width = 0;
  for (const auto& s : t.sentences) {
    labels.push_back(to_text(s));
    width = std::max(width, labels.back().size());
  }
  std::string out;
  for (std::size_t s = 0; s < t.sentences.size(); ++s) {
    out += labels[s];
    out.append(width - labels[s].size(), ' ');
    out += " ";
    for (const auto& w : t.worlds) {
      out += ' ';
      out += truth_char(w[s]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace plogic
