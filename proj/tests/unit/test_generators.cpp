#include <doctest.h>

#include "mondec/algorithms.hpp"
#include "mondec/generators.hpp"
#include "oracle.hpp"

using namespace mondec;

namespace {

const Alphabet ab({"a", "b"}, "_");

Word w(const char* text) { return parse_word(ab, text); }

bool is_prefix(const Word& u, const Word& v) { return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin()); }

// Splits x into #-terminated blocks; false if x does not end with #.
bool blocks(const Word& x, Symbol hash, std::vector<Word>& out) {
  out.clear();
  Word current;
  for (Symbol s : x) {
    if (s == hash) {
      out.push_back(current);
      current.clear();
    } else {
      current.push_back(s);
    }
  }
  return current.empty() && (x.empty() || x.back() == hash);
}

// R1 ∪ R2 evaluated from the definition; `in_l` decides membership in L.
bool reduction_member(const WordTuple& t, Symbol hash, const std::function<bool(const Word&)>& in_l) {
  std::vector<Word> left, right;
  bool left_ok = blocks(t[0], hash, left);
  bool right_ok = blocks(t[1], hash, right);
  if (left_ok && t[0] == t[1]) return true;
  if (!left_ok || !right_ok) return false;
  return std::all_of(left.begin(), left.end(), in_l);
}

Automaton random_nfa(std::uint64_t seed, std::size_t states) {
  RandomAutomatonOptions o;
  o.arity = 1;
  o.states = states;
  o.deterministic = false;
  o.density = 0.6;
  return random_automaton(seed, ab, o);
}

}  // namespace

TEST_CASE("Rng is reproducible") {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.below(1000) == b.below(1000));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    auto x = c.between(3, 7);
    CHECK(x >= 3);
    CHECK(x <= 7);
  }
}

TEST_CASE("regular expressions") {
  Automaton star = regular_language(ab, "(ab)*");
  CHECK(accepts(star, {w("")}));
  CHECK(accepts(star, {w("abab")}));
  CHECK_FALSE(accepts(star, {w("aba")}));
  Automaton any = regular_language(ab, "a.+|b?");
  CHECK(accepts(any, {w("ab")}));
  CHECK(accepts(any, {w("b")}));
  CHECK(accepts(any, {w("")}));
  CHECK_FALSE(accepts(any, {w("a")}));
  CHECK_THROWS_AS(regular_language(ab, "(a"), Error);
  CHECK_THROWS_AS(regular_language(ab, "c"), Error);
}

TEST_CASE("canonical relations") {
  Automaton eq = canonical("equality", ab);
  CHECK(accepts(eq, {w("ab"), w("ab")}));
  CHECK_FALSE(accepts(eq, {w("ab"), w("ba")}));
  Automaton len = canonical("equal_length", ab);
  CHECK(accepts(len, {w("ab"), w("ba")}));
  CHECK_FALSE(accepts(len, {w("a"), w("ab")}));

  Automaton sp = canonical("strict_prefix", ab);
  CHECK(sp.is_deterministic());
  CHECK(trim(sp).num_states() == 2);
  CHECK(sp.num_states() == 3);
  for (const auto& t : oracle::tuples_up_to(2, 2, 4))
    CHECK(oracle::accepts(sp, t) == (t[0].size() < t[1].size() && is_prefix(t[0], t[1])));
  CHECK_THROWS_AS(canonical("nonsense", ab), Error);
}

TEST_CASE("finite and product relations") {
  std::vector<WordTuple> tuples{{w("a"), w("")}, {w("ab"), w("b")}, {w(""), w("")}};
  Automaton f = finite_relation(ab, 2, tuples);
  for (const auto& t : oracle::tuples_up_to(2, 2, 3))
    CHECK(oracle::accepts(f, t) == (std::find(tuples.begin(), tuples.end(), t) != tuples.end()));
  CHECK_THROWS_AS(finite_relation(ab, 2, {{w("a")}}), Error);

  std::vector<Automaton> factors{regular_language(ab, "a*"), regular_language(ab, "b")};
  Automaton p = product_relation(factors);
  for (const auto& t : oracle::tuples_up_to(2, 2, 3)) {
    bool left = std::all_of(t[0].begin(), t[0].end(), [](Symbol s) { return s == 0; });
    CHECK(oracle::accepts(p, t) == (left && t[1] == w("b")));
  }
}

TEST_CASE("universality reduction") {
  Automaton all = universal_language(ab);
  ReductionInstance yes = universality_reduction(all);
  CHECK(yes.ground_truth == Verdict::decomposable);
  ReductionInstance no = universality_reduction(letter_language(ab, 0));
  CHECK(no.ground_truth == Verdict::not_decomposable);

  const Alphabet& ext = no.relation.alphabet();
  REQUIRE(ext.size() == 3);
  const Symbol hash = *ext.find("#");
  for (const auto& x : oracle::words_up_to(2, 3)) {
    Word block = x;
    block.push_back(hash);
    CHECK(accepts(no.relation, {block, block}));
    CHECK(accepts(yes.relation, {block, block}));
  }

  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    Automaton nfa = random_nfa(seed, 1 + seed % 3);
    ReductionInstance inst = universality_reduction(nfa);
    CHECK((inst.ground_truth == Verdict::decomposable) == is_universal_padded(nfa));
    auto in_l = [&](const Word& u) { return oracle::accepts(nfa, {u}); };
    for (const auto& t : oracle::tuples_up_to(2, 3, 4))
      CHECK(oracle::accepts(inst.relation, t) == reduction_member(t, hash, in_l));
    Rng rng(seed);
    for (int i = 0; i < 300; ++i) {
      WordTuple t(2);
      for (auto& x : t)
        for (std::size_t len = rng.below(7); len > 0; --len) x.push_back(static_cast<Symbol>(rng.below(3)));
      CHECK(oracle::accepts(inst.relation, t) == reduction_member(t, hash, in_l));
    }
  }
}

TEST_CASE("random DAGs and reachability") {
  Dag d = random_dag(3, 10, 0.3);
  for (auto [u, v] : d.edges) CHECK(u < v);
  CHECK(dag_reachable(d, 4, 4));
  Dag line{3, {{0, 1}, {1, 2}}};
  CHECK(dag_reachable(line, 0, 2));
  CHECK_FALSE(dag_reachable(line, 2, 0));
}

TEST_CASE("DAG reduction") {
  Dag edge{2, {{0, 1}}};
  ReductionInstance one = dag_reduction(edge, 0, 1);
  CHECK(one.ground_truth == Verdict::not_decomposable);
  CHECK(one.relation.is_deterministic());

  Dag none{3, {}};
  ReductionInstance empty = dag_reduction(none, 0, 2);
  CHECK(empty.ground_truth == Verdict::decomposable);
  CHECK(is_empty(empty.relation));

  Dag cyclic{2, {{0, 1}, {1, 0}}};
  CHECK_THROWS_AS(dag_reduction(cyclic, 0, 1), Error);

  // Relation = {(u,u) : u labels a path s→t, then a(d+1)-loops}.
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    Dag g = random_dag(seed, 5, 0.4);
    ReductionInstance inst = dag_reduction(g, 0, 4);
    CHECK(inst.relation.is_deterministic());
    CHECK((inst.ground_truth == Verdict::not_decomposable) == dag_reachable(g, 0, 4));
    const std::size_t d = inst.relation.alphabet().size() - 1;
    std::vector<std::vector<std::size_t>> out(g.vertices);
    for (auto [u, v] : g.edges) out[u].push_back(v);
    for (auto& o : out) std::sort(o.begin(), o.end());
    auto in_relation = [&](const Word& u) {
      std::size_t v = 0, i = 0;
      for (; i < u.size() && u[i] < d; ++i) {
        if (u[i] >= out[v].size()) return false;
        v = out[v][u[i]];
      }
      if (v != 4) return false;
      for (; i < u.size(); ++i)
        if (u[i] != d) return false;
      return true;
    };
    for (const auto& t : oracle::tuples_up_to(2, d + 1, 3))
      CHECK(oracle::accepts(inst.relation, t) == (t[0] == t[1] && in_relation(t[0])));
  }
}

TEST_CASE("random automata") {
  RandomAutomatonOptions o;
  o.states = 4;
  CHECK(random_automaton(42, ab, o) == random_automaton(42, ab, o));
  o.density = 1.0;
  Automaton full = random_automaton(7, ab, o);
  CHECK(full.is_complete());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    o.final_probability = 0.0;
    o.deterministic = seed % 2 == 0;
    o.density = 0.3;
    CHECK_FALSE(random_automaton(seed, ab, o).finals().empty());
  }
}
