#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mondec {

/// Base error for every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Index of a letter inside an Alphabet. The pad letter has index size().
using Symbol = std::uint16_t;

/// Encoded column letter: one Symbol per tape packed into an integer.
using Letter = std::uint32_t;

/// Base alphabet Σ together with the reserved pad letter ⊥.
///
/// Symbols are opaque names (packed alphabets use names such as "(a,_)").
/// Their order is the order given at construction and is used for every
/// deterministic enumeration in the library.
class Alphabet {
 public:
  Alphabet(std::vector<std::string> symbols, std::string pad);

  std::size_t size() const noexcept { return symbols_.size(); }
  Symbol pad() const noexcept { return static_cast<Symbol>(symbols_.size()); }
  bool is_pad(Symbol s) const noexcept { return s == pad(); }

  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  const std::string& pad_name() const noexcept { return pad_; }

  /// Name of a symbol or of the pad.
  const std::string& name(Symbol s) const;

  /// Looks up a name among the symbols and the pad.
  std::optional<Symbol> find(std::string_view name) const;

  bool operator==(const Alphabet&) const = default;

 private:
  std::vector<std::string> symbols_;
  std::string pad_;
};

/// Entry sequence of one column of a padded word, one Symbol per tape.
struct ColumnLetter {
  std::vector<Symbol> entries;

  bool operator==(const ColumnLetter&) const = default;
};

/// Bijection between column letters of a fixed arity and dense integer codes.
///
/// The first tape is the most significant digit, so ascending codes enumerate
/// columns lexicographically by symbol index (pad last).
class LetterCodec {
 public:
  LetterCodec(std::size_t arity, std::size_t alphabet_size);

  std::size_t arity() const noexcept { return arity_; }
  std::size_t base() const noexcept { return base_; }
  Symbol pad() const noexcept { return static_cast<Symbol>(base_ - 1); }

  /// Number of codes, the all-pad code included.
  Letter code_count() const noexcept { return count_; }
  Letter all_pad() const noexcept { return all_pad_; }

  Letter encode(std::span<const Symbol> entries) const;
  Letter encode(const ColumnLetter& c) const { return encode(c.entries); }
  ColumnLetter decode(Letter code) const;
  Symbol entry(Letter code, std::size_t tape) const;

  /// Bit i set iff tape i holds the pad.
  std::uint32_t pad_mask(Letter code) const;

  /// Codes of every letter of Σ_n (all codes but the all-pad one), ascending.
  std::vector<Letter> letters() const;

 private:
  std::size_t arity_;
  std::size_t base_;
  Letter count_;
  Letter all_pad_;
  std::vector<Letter> place_;  // base^(arity-1-i) for tape i
};

}  // namespace mondec
