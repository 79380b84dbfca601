#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "mondec/alphabet.hpp"
#include "mondec/words.hpp"

namespace mondec {

using State = std::uint32_t;

struct Transition {
  Letter letter;
  State target;

  auto operator<=>(const Transition&) const = default;
};

/// Synchronized n-tape automaton over the padded product alphabet (Σ_⊥)^n.
///
/// Instances are immutable; they are produced by AutomatonBuilder or by the
/// algorithms in algorithms.hpp. States are dense 0..num_states()-1 and every
/// state's transitions are sorted by (letter, target) without duplicates. The
/// all-pad column never labels a transition.
class Automaton {
 public:
  std::size_t arity() const noexcept { return codec_.arity(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const LetterCodec& codec() const noexcept { return codec_; }

  std::size_t num_states() const noexcept { return out_.size(); }
  std::size_t num_transitions() const noexcept { return transition_count_; }
  State initial() const noexcept { return initial_; }
  bool is_final(State s) const { return final_[s]; }
  std::vector<State> finals() const;

  std::span<const Transition> transitions(State s) const { return out_[s]; }
  /// Transitions of s labelled by `letter`.
  std::span<const Transition> successors(State s, Letter letter) const;

  /// At most one successor per (state, letter).
  bool is_deterministic() const noexcept { return deterministic_; }
  /// Exactly one successor per (state, letter) for every letter of Σ_n.
  bool is_complete() const noexcept { return complete_; }

  /// Same arity and alphabet.
  bool compatible_with(const Automaton& other) const {
    return arity() == other.arity() && alphabet_ == other.alphabet_;
  }

  bool operator==(const Automaton& other) const;

 private:
  friend class AutomatonBuilder;
  Automaton(Alphabet alphabet, LetterCodec codec) : alphabet_(std::move(alphabet)), codec_(codec) {}

  Alphabet alphabet_;
  LetterCodec codec_;
  std::vector<std::vector<Transition>> out_;
  std::vector<bool> final_;
  State initial_ = 0;
  std::size_t transition_count_ = 0;
  bool deterministic_ = true;
  bool complete_ = false;
};

/// Mutable staging area for an Automaton.
class AutomatonBuilder {
 public:
  AutomatonBuilder(std::size_t arity, Alphabet alphabet);

  std::size_t arity() const noexcept { return codec_.arity(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const LetterCodec& codec() const noexcept { return codec_; }
  std::size_t num_states() const noexcept { return out_.size(); }

  State add_state(bool final = false);
  void set_final(State s, bool final = true);
  void set_initial(State s);
  void add_transition(State from, Letter letter, State to);
  void add_transition(State from, const ColumnLetter& letter, State to);

  /// Finalizes the automaton. Creates a lone initial state if none was added.
  Automaton build() &&;

 private:
  void check_state(State s) const;

  Alphabet alphabet_;
  LetterCodec codec_;
  std::vector<std::vector<Transition>> out_;
  std::vector<bool> final_;
  State initial_ = 0;
};

}  // namespace mondec
