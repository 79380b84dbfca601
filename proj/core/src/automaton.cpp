#include "mondec/automaton.hpp"

#include <algorithm>
#include <limits>

namespace mondec {

std::vector<State> Automaton::finals() const {
  std::vector<State> out;
  for (State s = 0; s < num_states(); ++s)
    if (final_[s]) out.push_back(s);
  return out;
}

std::span<const Transition> Automaton::successors(State s, Letter letter) const {
  const auto& ts = out_[s];
  auto lo = std::lower_bound(ts.begin(), ts.end(), Transition{letter, 0});
  auto hi = std::lower_bound(lo, ts.end(), Transition{letter + 1, 0});
  return {ts.data() + (lo - ts.begin()), static_cast<std::size_t>(hi - lo)};
}

bool Automaton::operator==(const Automaton& other) const {
  return alphabet_ == other.alphabet_ && arity() == other.arity() && initial_ == other.initial_ &&
         final_ == other.final_ && out_ == other.out_;
}

AutomatonBuilder::AutomatonBuilder(std::size_t arity, Alphabet alphabet)
    : alphabet_(std::move(alphabet)), codec_(arity, alphabet_.size()) {}

State AutomatonBuilder::add_state(bool final) {
  if (out_.size() >= std::numeric_limits<State>::max()) throw Error("too many states");
  out_.emplace_back();
  final_.push_back(final);
  return static_cast<State>(out_.size() - 1);
}

void AutomatonBuilder::check_state(State s) const {
  if (s >= out_.size()) throw Error("state " + std::to_string(s) + " does not exist");
}

void AutomatonBuilder::set_final(State s, bool final) {
  check_state(s);
  final_[s] = final;
}

void AutomatonBuilder::set_initial(State s) {
  check_state(s);
  initial_ = s;
}

void AutomatonBuilder::add_transition(State from, Letter letter, State to) {
  check_state(from);
  check_state(to);
  if (letter >= codec_.code_count()) throw Error("letter code out of range");
  if (letter == codec_.all_pad()) throw Error("the all-pad column cannot label a transition");
  out_[from].push_back({letter, to});
}

void AutomatonBuilder::add_transition(State from, const ColumnLetter& letter, State to) {
  add_transition(from, codec_.encode(letter), to);
}

Automaton AutomatonBuilder::build() && {
  if (out_.empty()) add_state(false);
  Automaton a(std::move(alphabet_), codec_);
  a.out_ = std::move(out_);
  a.final_ = std::move(final_);
  a.initial_ = initial_;
  const std::size_t letter_count = codec_.code_count() - 1;
  bool complete = true;
  for (auto& ts : a.out_) {
    std::sort(ts.begin(), ts.end());
    ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
    a.transition_count_ += ts.size();
    for (std::size_t i = 1; i < ts.size(); ++i)
      if (ts[i].letter == ts[i - 1].letter) a.deterministic_ = false;
  }
  if (a.deterministic_) {
    for (const auto& ts : a.out_)
      if (ts.size() != letter_count) complete = false;
  } else {
    complete = false;
  }
  a.complete_ = complete;
  return a;
}

}  // namespace mondec
