#include "mondec/generators.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "mondec/algorithms.hpp"

namespace mondec {

std::string_view to_string(Verdict v) {
  return v == Verdict::decomposable ? "decomposable" : "not_decomposable";
}

Verdict parse_verdict(std::string_view text) {
  if (text == "decomposable") return Verdict::decomposable;
  if (text == "not_decomposable") return Verdict::not_decomposable;
  throw Error("unknown verdict '" + std::string(text) + "'");
}

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw Error("empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

bool Rng::chance(double p) {
  const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  return unit < p;
}

Automaton epsilon_language(const Alphabet& alphabet) {
  AutomatonBuilder b(1, alphabet);
  b.add_state(true);
  return std::move(b).build();
}

Automaton letter_language(const Alphabet& alphabet, Symbol symbol) {
  if (symbol >= alphabet.size()) throw Error("letter_language: not a symbol of the alphabet");
  AutomatonBuilder b(1, alphabet);
  State from = b.add_state(false);
  State to = b.add_state(true);
  b.add_transition(from, ColumnLetter{{symbol}}, to);
  return std::move(b).build();
}

Automaton universal_language(const Alphabet& alphabet) {
  AutomatonBuilder b(1, alphabet);
  State s = b.add_state(true);
  for (Symbol x = 0; x < alphabet.size(); ++x) b.add_transition(s, ColumnLetter{{x}}, s);
  return std::move(b).build();
}

namespace {

class RegexParser {
 public:
  RegexParser(const Alphabet& alphabet, std::string_view text) : alphabet_(alphabet), text_(text) {}

  Automaton parse() {
    Automaton a = alternation();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return a;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("regular expression '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + what);
  }

  bool at(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  Automaton alternation() {
    Automaton a = concatenation();
    while (at('|')) {
      ++pos_;
      a = trim(unite(a, concatenation()));
    }
    return a;
  }

  Automaton concatenation() {
    Automaton a = epsilon_language(alphabet_);
    while (pos_ < text_.size() && !at('|') && !at(')')) a = concatenate(a, repetition());
    return a;
  }

  Automaton repetition() {
    Automaton a = atom();
    while (at('*') || at('+') || at('?')) {
      char op = text_[pos_++];
      if (op == '*') a = kleene_star(a);
      else if (op == '+') a = concatenate(a, kleene_star(a));
      else a = trim(unite(a, epsilon_language(alphabet_)));
    }
    return a;
  }

  Automaton atom() {
    if (at('(')) {
      ++pos_;
      Automaton a = alternation();
      if (!at(')')) fail("missing ')'");
      ++pos_;
      return a;
    }
    if (at('.')) {
      ++pos_;
      AutomatonBuilder b(1, alphabet_);
      State from = b.add_state(false);
      State to = b.add_state(true);
      for (Symbol x = 0; x < alphabet_.size(); ++x) b.add_transition(from, ColumnLetter{{x}}, to);
      return std::move(b).build();
    }
    if (pos_ >= text_.size() || at('*') || at('+') || at('?')) fail("expected a symbol");
    auto sym = alphabet_.find(text_.substr(pos_, 1));
    if (!sym || alphabet_.is_pad(*sym)) fail("unknown symbol '" + std::string(1, text_[pos_]) + "'");
    ++pos_;
    return letter_language(alphabet_, *sym);
  }

  const Alphabet& alphabet_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

// Builds a complete DFA over two tapes from a per-state letter rule; rule
// returns the target state or -1 for the sink.
template <typename Rule>
Automaton binary_dfa(const Alphabet& alphabet, std::size_t live, std::vector<bool> finals, Rule rule) {
  AutomatonBuilder b(2, alphabet);
  for (std::size_t i = 0; i < live; ++i) b.add_state(finals[i]);
  State sink = b.add_state(false);
  const LetterCodec& codec = b.codec();
  for (Letter c : codec.letters()) {
    Symbol x = codec.entry(c, 0);
    Symbol y = codec.entry(c, 1);
    for (State s = 0; s < live; ++s) {
      int to = rule(s, x, y, alphabet.pad());
      b.add_transition(s, c, to < 0 ? sink : static_cast<State>(to));
    }
    b.add_transition(sink, c, sink);
  }
  return std::move(b).build();
}

}  // namespace

Automaton regular_language(const Alphabet& alphabet, std::string_view pattern) {
  return trim(RegexParser(alphabet, pattern).parse());
}

Automaton equality_relation(const Alphabet& alphabet) {
  return binary_dfa(alphabet, 1, {true}, [](State, Symbol x, Symbol y, Symbol pad) {
    return x == y && x != pad ? 0 : -1;
  });
}

Automaton strict_prefix_relation(const Alphabet& alphabet) {
  return binary_dfa(alphabet, 2, {false, true}, [](State s, Symbol x, Symbol y, Symbol pad) {
    if (s == 0 && x == y && x != pad) return 0;
    if (x == pad && y != pad) return 1;
    return -1;
  });
}

Automaton equal_length_relation(const Alphabet& alphabet) {
  return binary_dfa(alphabet, 1, {true}, [](State, Symbol x, Symbol y, Symbol pad) {
    return x != pad && y != pad ? 0 : -1;
  });
}

Automaton canonical(std::string_view name, const Alphabet& alphabet) {
  if (name == "equality") return equality_relation(alphabet);
  if (name == "strict_prefix") return strict_prefix_relation(alphabet);
  if (name == "equal_length") return equal_length_relation(alphabet);
  throw Error("unknown canonical relation '" + std::string(name) + "'");
}

Automaton finite_relation(const Alphabet& alphabet, std::size_t arity, const std::vector<WordTuple>& tuples) {
  AutomatonBuilder b(arity, alphabet);
  State root = b.add_state(false);
  std::map<std::pair<State, Letter>, State> child;
  for (const auto& t : tuples) {
    if (t.size() != arity) throw Error("finite relation: tuple of the wrong arity");
    State at = root;
    for (Letter c : pad_encode(b.codec(), t)) {
      auto [it, fresh] = child.try_emplace({at, c}, 0);
      if (fresh) {
        it->second = b.add_state(false);
        b.add_transition(at, c, it->second);
      }
      at = it->second;
    }
    b.set_final(at);
  }
  return std::move(b).build();
}

Automaton product_relation(const std::vector<Automaton>& factors) { return language_product(factors); }

ReductionInstance universality_reduction(const Automaton& nfa) {
  if (nfa.arity() != 1) throw Error("universality reduction expects an arity-1 automaton");
  const Alphabet& sigma = nfa.alphabet();
  std::string sep = "#";
  while (sigma.find(sep)) sep += "#";
  std::vector<std::string> names = sigma.symbols();
  names.push_back(sep);
  Alphabet extended(names, sigma.pad_name());
  const Symbol hash = static_cast<Symbol>(sigma.size());

  Automaton separator = letter_language(extended, hash);
  Automaton blocks_in_l = kleene_star(concatenate(with_alphabet(nfa, extended), separator));
  Automaton blocks_any = kleene_star(concatenate(with_alphabet(universal_language(sigma), extended), separator));
  std::vector<Automaton> factors{blocks_in_l, blocks_any};
  Automaton r2 = language_product(factors);
  // R1 is the diagonal of the block words (Σ*·#)*; on the whole of
  // (Σ ∪ {#})* the union would never be decomposable.
  std::vector<Automaton> diagonal{blocks_any, blocks_any};
  Automaton r1 = intersect(equality_relation(extended), language_product(diagonal));

  bool universal = is_universal_padded(nfa);
  return {trim(unite(r1, r2)), universal ? Verdict::decomposable : Verdict::not_decomposable,
          std::string("universality reduction of a ") + std::to_string(nfa.num_states()) +
              "-state NFA; L(A) = Sigma*: " + (universal ? "yes" : "no")};
}

Dag random_dag(std::uint64_t seed, std::size_t vertices, double edge_probability) {
  Rng rng(seed);
  Dag dag{vertices, {}};
  for (std::size_t i = 0; i < vertices; ++i)
    for (std::size_t j = i + 1; j < vertices; ++j)
      if (rng.chance(edge_probability)) dag.edges.emplace_back(i, j);
  return dag;
}

bool dag_reachable(const Dag& dag, std::size_t from, std::size_t to) {
  std::vector<std::vector<std::size_t>> adj(dag.vertices);
  for (auto [u, v] : dag.edges) adj.at(u).push_back(v);
  std::vector<bool> seen(dag.vertices, false);
  std::vector<std::size_t> stack{from};
  seen.at(from) = true;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    if (u == to) return true;
    for (std::size_t v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return false;
}

ReductionInstance dag_reduction(const Dag& dag, std::size_t source, std::size_t target) {
  if (source >= dag.vertices || target >= dag.vertices) throw Error("dag reduction: vertex out of range");
  std::vector<std::vector<std::size_t>> adj(dag.vertices);
  std::vector<std::size_t> indegree(dag.vertices, 0);
  for (auto [u, v] : dag.edges) {
    if (u >= dag.vertices || v >= dag.vertices) throw Error("dag reduction: edge endpoint out of range");
    adj[u].push_back(v);
    ++indegree[v];
  }
  {
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < dag.vertices; ++v)
      if (indegree[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    auto deg = indegree;
    while (!ready.empty()) {
      std::size_t u = ready.front();
      ready.pop_front();
      ++seen;
      for (std::size_t v : adj[u])
        if (--deg[v] == 0) ready.push_back(v);
    }
    if (seen != dag.vertices) throw Error("dag reduction: the graph has a cycle");
  }
  std::size_t degree = 0;
  for (auto& out : adj) {
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    degree = std::max(degree, out.size());
  }
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= degree + 1; ++i) names.push_back("a" + std::to_string(i));
  Alphabet alphabet(names, "_");

  AutomatonBuilder b(2, alphabet);
  for (std::size_t v = 0; v < dag.vertices; ++v) b.add_state(v == target);
  State sink = b.add_state(false);
  b.set_initial(static_cast<State>(source));
  auto column = [](std::size_t i, std::size_t j) {
    return ColumnLetter{{static_cast<Symbol>(i), static_cast<Symbol>(j)}};
  };
  for (std::size_t v = 0; v < dag.vertices; ++v)
    for (std::size_t i = 0; i < adj[v].size(); ++i)
      b.add_transition(static_cast<State>(v), column(i, i), static_cast<State>(adj[v][i]));
  b.add_transition(static_cast<State>(target), column(degree, degree), static_cast<State>(target));
  for (State s = 0; s <= sink; ++s)
    for (std::size_t i = 0; i <= degree; ++i)
      for (std::size_t j = 0; j <= degree; ++j)
        if (i != j) b.add_transition(s, column(i, j), sink);

  bool reach = dag_reachable(dag, source, target);
  return {std::move(b).build(), reach ? Verdict::not_decomposable : Verdict::decomposable,
          "dag reduction over " + std::to_string(dag.vertices) + " vertices, " +
              std::to_string(dag.edges.size()) + " edges, s=" + std::to_string(source) +
              ", t=" + std::to_string(target) + "; t reachable: " + (reach ? "yes" : "no")};
}

Automaton random_automaton(std::uint64_t seed, const Alphabet& alphabet, const RandomAutomatonOptions& options) {
  if (options.states == 0) throw Error("random automaton needs at least one state");
  if (!(options.density > 0.0 && options.density <= 1.0)) throw Error("density must lie in (0, 1]");
  Rng rng(seed);
  AutomatonBuilder b(options.arity, alphabet);
  bool any_final = false;
  for (std::size_t i = 0; i < options.states; ++i) {
    bool f = rng.chance(options.final_probability);
    any_final |= f;
    b.add_state(f);
  }
  if (!any_final) b.set_final(static_cast<State>(rng.below(options.states)));
  const auto letters = b.codec().letters();
  for (State s = 0; s < options.states; ++s)
    for (Letter c : letters) {
      if (!rng.chance(options.density)) continue;
      b.add_transition(s, c, static_cast<State>(rng.below(options.states)));
      if (!options.deterministic && rng.chance(0.5))
        b.add_transition(s, c, static_cast<State>(rng.below(options.states)));
    }
  return std::move(b).build();
}

}  // namespace mondec
