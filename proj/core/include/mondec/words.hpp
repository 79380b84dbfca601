#pragma once

#include <string>
#include <vector>

#include "mondec/alphabet.hpp"

namespace mondec {

/// A word over Σ, as symbol indices. Never contains the pad.
using Word = std::vector<Symbol>;

/// An n-tuple of words.
using WordTuple = std::vector<Word>;

/// Column-wise padded encoding of a WordTuple, as letter codes.
using PaddedWord = std::vector<Letter>;

/// Encodes (w1..wn) as the columns of (w1⊥^l1, .., wn⊥^ln).
PaddedWord pad_encode(const LetterCodec& codec, const WordTuple& tuple);

/// Inverse of pad_encode. Throws Error on an all-pad column or on a pad
/// followed by a letter on some tape.
WordTuple pad_decode(const LetterCodec& codec, const PaddedWord& columns);

/// True iff every tape lies in Σ*⊥* and no column is all-pad.
bool is_validly_padded(const LetterCodec& codec, const PaddedWord& columns);

enum class SliceMode { suffix, prefix };

/// suffix: the word left after dropping the first `count` letters.
/// prefix: the first `count` letters. Throws if count > |w|.
Word word_slice(const Word& w, std::size_t count, SliceMode mode);

/// Parses a word written as a string of one-character symbol names, or as
/// whitespace separated names when any symbol is longer than one character.
Word parse_word(const Alphabet& alphabet, std::string_view text);

/// Inverse of parse_word; single-character alphabets are written without
/// separators.
std::string format_word(const Alphabet& alphabet, const Word& w);

std::string format_tuple(const Alphabet& alphabet, const WordTuple& t);

}  // namespace mondec
