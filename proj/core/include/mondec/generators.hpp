#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mondec/automaton.hpp"

namespace mondec {

enum class Verdict { decomposable, not_decomposable };

std::string_view to_string(Verdict v);
Verdict parse_verdict(std::string_view text);

/// A generated relation bundled with a ground truth computed without the
/// decision procedure.
struct ReductionInstance {
  Automaton relation;
  Verdict ground_truth;
  std::string provenance;
};

/// Seeded generator whose draws do not depend on the standard library's
/// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
  bool chance(double p);

 private:
  std::mt19937_64 engine_;
};

// Arity-1 language building blocks.
Automaton epsilon_language(const Alphabet& alphabet);
Automaton letter_language(const Alphabet& alphabet, Symbol symbol);
/// Σ* over every symbol of the alphabet.
Automaton universal_language(const Alphabet& alphabet);

/// Arity-1 automaton for a regular expression over single-character symbol
/// names: concatenation, '|', '*', '+', '?', parentheses, '.' for any symbol;
/// "()" or the empty pattern denote ε.
Automaton regular_language(const Alphabet& alphabet, std::string_view pattern);

// Canonical relations, all complete DFAs.
Automaton equality_relation(const Alphabet& alphabet);
/// {(u, v) : u is a strict prefix of v}
Automaton strict_prefix_relation(const Alphabet& alphabet);
/// {(u, v) : |u| = |v|}
Automaton equal_length_relation(const Alphabet& alphabet);
/// Parameterless canonical relations by name: equality, strict_prefix, equal_length.
Automaton canonical(std::string_view name, const Alphabet& alphabet);

/// Trie automaton accepting exactly the given tuples (all of the same arity).
Automaton finite_relation(const Alphabet& alphabet, std::size_t arity, const std::vector<WordTuple>& tuples);

/// L1 × .. × Ln for arity-1 factors.
Automaton product_relation(const std::vector<Automaton>& factors);

/// R1 ∪ R2 with R1 = {(u,u) : u ∈ (Σ*·#)*} and R2 = (L·#)* × (Σ*·#)*.
/// Ground truth: decomposable iff L(nfa) = Σ*.
ReductionInstance universality_reduction(const Automaton& nfa);

struct Dag {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Edges i→j with i < j, each present with the given probability.
Dag random_dag(std::uint64_t seed, std::size_t vertices, double edge_probability);

/// Plain graph search; a vertex reaches itself.
bool dag_reachable(const Dag& dag, std::size_t from, std::size_t to);

/// Binary DFA over {a1..a(d+1)} (d the maximum out-degree) whose relation is
/// {(u,u) : u labels a path from s to t followed by a(d+1)-loops}.
/// Ground truth: decomposable iff t is not reachable from s. Throws on cycles.
ReductionInstance dag_reduction(const Dag& dag, std::size_t source, std::size_t target);

struct RandomAutomatonOptions {
  std::size_t arity = 2;
  std::size_t states = 3;
  /// Probability that a (state, letter) pair gets transitions.
  double density = 0.5;
  bool deterministic = true;
  double final_probability = 0.5;
};

/// Reproducible pseudo-random automaton with at least one final state.
Automaton random_automaton(std::uint64_t seed, const Alphabet& alphabet, const RandomAutomatonOptions& options);

}  // namespace mondec
