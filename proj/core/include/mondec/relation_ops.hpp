#pragma once

#include <string>
#include <vector>

#include "mondec/automaton.hpp"

namespace mondec {

/// The alphabet Σ_k = (Σ_⊥)^k ∖ {⊥^k} of packed columns of width k.
///
/// Letter i is the column whose LetterCodec(k, |Σ|) code is i, so letters are
/// ordered lexicographically with the pad last. Width-1 letters reuse the base
/// symbol names; wider letters are written as tuples, e.g. "(a,_)".
class PackedAlphabet {
 public:
  PackedAlphabet(Alphabet base, std::size_t width);

  const Alphabet& base() const noexcept { return base_; }
  std::size_t width() const noexcept { return codec_.arity(); }
  std::size_t size() const noexcept { return codec_.code_count() - 1; }
  const LetterCodec& codec() const noexcept { return codec_; }

  std::vector<Symbol> entries(std::size_t letter) const;
  std::string name(std::size_t letter) const;

  /// The fresh pad ⊥′ used by induced relations ("!" unless already taken).
  const std::string& packed_pad() const noexcept { return packed_pad_; }

 private:
  Alphabet base_;
  LetterCodec codec_;
  std::string packed_pad_;
};

/// Σ′ = Σ_k ∪ Σ_{n−k} with pad ⊥′: Σ_k letters first, then the letters of
/// Σ_{n−k} not already present.
Alphabet induced_alphabet(const Alphabet& base, std::size_t k, std::size_t n);

/// δ_n: packs a tuple column-wise into a word over Σ_n (an alphabet of
/// PackedAlphabet(base, n).size() letters).
Word delta_encode(const PackedAlphabet& packed, const WordTuple& tuple);

/// Inverse of delta_encode. Throws Error on malformed packed words.
WordTuple delta_decode(const PackedAlphabet& packed, const Word& word);

/// The binary relation R_k (1 ≤ k ≤ n−1): every transition letter is split
/// after tape k and each half is packed through λ (an all-pad half becomes ⊥′).
/// States, initial and finals are unchanged.
Automaton induced_binary(const Automaton& relation, std::size_t k);

/// Encodes an n-tuple as the pair (δ(first k words), δ(rest)) over the
/// induced alphabet of R_k.
WordTuple induced_pair(const Alphabet& base, const WordTuple& tuple, std::size_t k);

struct NotSimConstruction {
  Automaton relation;                 ///< trimmed NFA for R^≁
  std::size_t dfa_states = 0;         ///< states of the minimal DFA of R
  std::size_t pre_projection_states = 0;  ///< states of the ternary union
  std::size_t disjunct_states[4] = {0, 0, 0, 0};
};

/// Builds the automaton of pairs (w, w′) separated by some context u:
/// ∃u (R(w,u) xor R(w′,u)) ∨ (R(u,w) xor R(u,w′)).
NotSimConstruction construct_not_sim(const Automaton& relation);

/// construct_not_sim(relation).relation
Automaton build_not_sim(const Automaton& relation);

}  // namespace mondec
