#pragma once

#include <span>
#include <vector>

#include "mondec/automaton.hpp"

namespace mondec {

/// Sorted, duplicate-free set of states.
using StateSet = std::vector<State>;

/// States reached from `from` after reading `columns`. No validity check on
/// the columns: this is the raw run over (Σ_⊥)^n.
StateSet run(const Automaton& a, const StateSet& from, std::span<const Letter> columns);

/// True iff some run on `columns` from the initial state ends in a final state.
bool accepts_padded(const Automaton& a, std::span<const Letter> columns);

/// Membership of a word tuple in the relation of `a`. The empty tuple is
/// accepted iff the initial state is final. Throws on arity mismatch.
bool accepts(const Automaton& a, const WordTuple& tuple);

/// Automaton accepting exactly the validly padded words of the given arity.
/// Its states are the sets of tapes that have already ended (all but the full
/// set), so it has 2^n - 1 states; deterministic, not complete.
Automaton valid_pad(std::size_t arity, const Alphabet& alphabet);

/// Subset construction over reachable subsets, in breadth-first discovery
/// order with letters ascending. The result is deterministic and complete;
/// the empty subset becomes the sink when needed.
Automaton determinize(const Automaton& a);

/// Adds a sink so that every (state, letter) has a successor. Returns the
/// input unchanged when nothing is missing.
Automaton complete(const Automaton& a);

/// Accepts pad_encode(t) iff t is not in the relation of `a`. The result only
/// accepts validly padded words.
Automaton complement_padded(const Automaton& a);

enum class BoolOp { conjunction, disjunction };

/// Pair construction over reachable pairs. Disjunction completes both
/// operands first so either run can accept on its own.
Automaton boolean_product(const Automaton& a, const Automaton& b, BoolOp op);

inline Automaton intersect(const Automaton& a, const Automaton& b) {
  return boolean_product(a, b, BoolOp::conjunction);
}

/// Union by disjoint sum behind a fresh initial state that copies the
/// outgoing transitions of every operand's initial state.
Automaton unite(std::span<const Automaton> parts);
Automaton unite(const Automaton& a, const Automaton& b);

/// Lifts an m-tape automaton to n tapes: tape i of `a` is read from output
/// tape positions[i]; other tapes are unconstrained. Once the chosen tapes
/// have all ended, the run must sit in a final state of `a` and stays there.
/// Only validly padded n-tape words are accepted.
Automaton cylindrify(const Automaton& a, std::span<const std::size_t> positions,
                     std::size_t arity);

/// Existential projection removing tape `tape` (0-based). Columns that become
/// all-pad are absorbed by marking as final every state that reaches a final
/// state through such columns.
Automaton project(const Automaton& a, std::size_t tape);

/// Keeps states that are both reachable and co-reachable (and the initial).
Automaton trim(const Automaton& a);

/// Same as trim, also reporting the kept original state of each new state.
Automaton trim(const Automaton& a, std::vector<State>& kept);

bool is_empty(const Automaton& a);

/// Canonical minimal complete DFA of the padded language (Hopcroft).
/// States are numbered breadth-first from the initial state.
Automaton minimize(const Automaton& a);

/// True iff every validly padded word is accepted.
bool is_universal_padded(const Automaton& a);

/// Language-preserving quotient by the coarsest forward bisimulation.
Automaton quotient_bisimulation(const Automaton& a);

/// Output tape j reads input tape order[j].
Automaton permute_tapes(const Automaton& a, std::span<const std::size_t> order);

/// Renames states: old state s becomes perm[s].
Automaton permute_states(const Automaton& a, std::span<const State> perm);

/// Re-expresses `a` over a larger alphabet containing every symbol of its own
/// (matched by name) and the same pad.
Automaton with_alphabet(const Automaton& a, const Alphabet& target);

/// Arity-1 concatenation L(a)·L(b).
Automaton concatenate(const Automaton& a, const Automaton& b);

/// Arity-1 Kleene star.
Automaton kleene_star(const Automaton& a);

/// n-ary relation L1 × .. × Ln from arity-1 automata over one alphabet.
Automaton language_product(std::span<const Automaton> factors);

}  // namespace mondec
