#include "mondec/relation_ops.hpp"

#include "mondec/algorithms.hpp"

namespace mondec {

namespace {

std::string fresh_pad(const Alphabet& base) {
  std::string pad = "!";
  while (base.find(pad)) pad += "!";
  return pad;
}

}  // namespace

PackedAlphabet::PackedAlphabet(Alphabet base, std::size_t width)
    : base_(std::move(base)), codec_(width, base_.size()), packed_pad_(fresh_pad(base_)) {}

std::vector<Symbol> PackedAlphabet::entries(std::size_t letter) const {
  if (letter >= size()) throw Error("packed letter out of range");
  return codec_.decode(static_cast<Letter>(letter)).entries;
}

std::string PackedAlphabet::name(std::size_t letter) const {
  auto e = entries(letter);
  if (e.size() == 1) return base_.name(e[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) out += ',';
    out += base_.name(e[i]);
  }
  return out + ")";
}

Alphabet induced_alphabet(const Alphabet& base, std::size_t k, std::size_t n) {
  if (k == 0 || k >= n) throw Error("split position must satisfy 1 <= k <= n-1");
  PackedAlphabet left(base, k);
  PackedAlphabet right(base, n - k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < left.size(); ++i) names.push_back(left.name(i));
  if (n - k != k)
    for (std::size_t i = 0; i < right.size(); ++i) names.push_back(right.name(i));
  return Alphabet(std::move(names), left.packed_pad());
}

Word delta_encode(const PackedAlphabet& packed, const WordTuple& tuple) {
  PaddedWord columns = pad_encode(packed.codec(), tuple);
  return Word(columns.begin(), columns.end());
}

WordTuple delta_decode(const PackedAlphabet& packed, const Word& word) {
  PaddedWord columns;
  for (Symbol s : word) {
    if (s >= packed.size()) throw Error("symbol is not a packed letter of this width");
    columns.push_back(s);
  }
  return pad_decode(packed.codec(), columns);
}

Automaton induced_binary(const Automaton& relation, std::size_t k) {
  const std::size_t n = relation.arity();
  if (n < 2) throw Error("induced relations need arity at least 2");
  if (k == 0 || k >= n) throw Error("split position " + std::to_string(k) + " out of range 1.." +
                                    std::to_string(n - 1));
  Alphabet target = induced_alphabet(relation.alphabet(), k, n);
  const LetterCodec left(k, relation.alphabet().size());
  const LetterCodec right(n - k, relation.alphabet().size());
  const Symbol right_offset = static_cast<Symbol>(n - k == k ? 0 : left.code_count() - 1);

  AutomatonBuilder b(2, target);
  const Symbol packed_pad = target.pad();
  const LetterCodec& in = relation.codec();
  std::vector<Symbol> lhs(k), rhs(n - k);
  for (State s = 0; s < relation.num_states(); ++s) b.add_state(relation.is_final(s));
  b.set_initial(relation.initial());
  for (State s = 0; s < relation.num_states(); ++s)
    for (const auto& t : relation.transitions(s)) {
      for (std::size_t i = 0; i < k; ++i) lhs[i] = in.entry(t.letter, i);
      for (std::size_t i = k; i < n; ++i) rhs[i - k] = in.entry(t.letter, i);
      Letter lc = left.encode(lhs);
      Letter rc = right.encode(rhs);
      Symbol column[2] = {lc == left.all_pad() ? packed_pad : static_cast<Symbol>(lc),
                          rc == right.all_pad() ? packed_pad : static_cast<Symbol>(right_offset + rc)};
      b.add_transition(s, b.codec().encode(column), t.target);
    }
  return std::move(b).build();
}

WordTuple induced_pair(const Alphabet& base, const WordTuple& tuple, std::size_t k) {
  const std::size_t n = tuple.size();
  if (k == 0 || k >= n) throw Error("split position out of range");
  PackedAlphabet left(base, k);
  PackedAlphabet right(base, n - k);
  const Symbol right_offset = static_cast<Symbol>(n - k == k ? 0 : left.size());
  Word x = delta_encode(left, WordTuple(tuple.begin(), tuple.begin() + static_cast<std::ptrdiff_t>(k)));
  Word y = delta_encode(right, WordTuple(tuple.begin() + static_cast<std::ptrdiff_t>(k), tuple.end()));
  for (auto& s : y) s = static_cast<Symbol>(s + right_offset);
  return {x, y};
}

NotSimConstruction construct_not_sim(const Automaton& relation) {
  if (relation.arity() != 2) throw Error("R^≁ is defined for binary relations only");
  NotSimConstruction out{relation};

  Automaton dfa = minimize(relation);
  Automaton co = complement_padded(dfa);
  out.dfa_states = dfa.num_states();

  // Ternary tapes: 0 = w, 1 = w′, 2 = u.
  auto cyl = [](const Automaton& a, std::size_t first, std::size_t second) {
    const std::size_t positions[2] = {first, second};
    return cylindrify(a, positions, 3);
  };
  std::vector<Automaton> disjuncts;
  disjuncts.reserve(4);
  disjuncts.push_back(intersect(cyl(dfa, 0, 2), cyl(co, 1, 2)));  // R(w,u) ∧ ¬R(w′,u)
  disjuncts.push_back(intersect(cyl(co, 0, 2), cyl(dfa, 1, 2)));  // ¬R(w,u) ∧ R(w′,u)
  disjuncts.push_back(intersect(cyl(dfa, 2, 0), cyl(co, 2, 1)));  // R(u,w) ∧ ¬R(u,w′)
  disjuncts.push_back(intersect(cyl(co, 2, 0), cyl(dfa, 2, 1)));  // ¬R(u,w) ∧ R(u,w′)
  for (std::size_t i = 0; i < 4; ++i) {
    disjuncts[i] = trim(minimize(disjuncts[i]));
    out.disjunct_states[i] = disjuncts[i].num_states();
  }

  Automaton joined = unite(disjuncts);
  out.pre_projection_states = joined.num_states();
  out.relation = trim(quotient_bisimulation(trim(project(joined, 2))));
  return out;
}

Automaton build_not_sim(const Automaton& relation) { return construct_not_sim(relation).relation; }

}  // namespace mondec
