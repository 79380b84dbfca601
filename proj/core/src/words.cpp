#include "mondec/words.hpp"

#include <algorithm>
#include <sstream>

namespace mondec {

PaddedWord pad_encode(const LetterCodec& codec, const WordTuple& tuple) {
  if (tuple.size() != codec.arity()) throw Error("tuple arity does not match codec arity");
  std::size_t length = 0;
  for (const auto& w : tuple) {
    for (Symbol s : w)
      if (s >= codec.pad()) throw Error("word contains the pad or an unknown symbol");
    length = std::max(length, w.size());
  }
  PaddedWord out(length);
  std::vector<Symbol> column(codec.arity());
  for (std::size_t pos = 0; pos < length; ++pos) {
    for (std::size_t i = 0; i < codec.arity(); ++i)
      column[i] = pos < tuple[i].size() ? tuple[i][pos] : codec.pad();
    out[pos] = codec.encode(column);
  }
  return out;
}

bool is_validly_padded(const LetterCodec& codec, const PaddedWord& columns) {
  std::uint32_t ended = 0;
  for (Letter c : columns) {
    if (c >= codec.code_count() || c == codec.all_pad()) return false;
    std::uint32_t mask = codec.pad_mask(c);
    if ((ended & mask) != ended) return false;
    ended = mask;
  }
  return true;
}

WordTuple pad_decode(const LetterCodec& codec, const PaddedWord& columns) {
  WordTuple out(codec.arity());
  std::uint32_t ended = 0;
  for (std::size_t pos = 0; pos < columns.size(); ++pos) {
    Letter c = columns[pos];
    if (c >= codec.code_count()) throw Error("column code out of range");
    if (c == codec.all_pad())
      throw Error("all-pad column at position " + std::to_string(pos));
    std::uint32_t mask = codec.pad_mask(c);
    if ((ended & mask) != ended)
      throw Error("invalid padding at position " + std::to_string(pos) +
                  ": a letter follows the pad on some tape");
    ended = mask;
    for (std::size_t i = 0; i < codec.arity(); ++i)
      if (!(mask & (1u << i))) out[i].push_back(codec.entry(c, i));
  }
  return out;
}

Word word_slice(const Word& w, std::size_t count, SliceMode mode) {
  if (count > w.size())
    throw Error("slice length " + std::to_string(count) + " exceeds word length " +
                std::to_string(w.size()));
  if (mode == SliceMode::prefix) return Word(w.begin(), w.begin() + count);
  return Word(w.begin() + count, w.end());
}

namespace {

bool single_char_symbols(const Alphabet& alphabet) {
  return std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                     [](const std::string& s) { return s.size() == 1; });
}

Symbol lookup(const Alphabet& alphabet, std::string_view name) {
  auto s = alphabet.find(name);
  if (!s || alphabet.is_pad(*s)) throw Error("unknown symbol '" + std::string(name) + "'");
  return *s;
}

}  // namespace

Word parse_word(const Alphabet& alphabet, std::string_view text) {
  Word w;
  if (single_char_symbols(alphabet) && text.find(' ') == std::string_view::npos) {
    for (char ch : text) w.push_back(lookup(alphabet, std::string_view(&ch, 1)));
    return w;
  }
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) w.push_back(lookup(alphabet, token));
  return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w) {
  bool compact = single_char_symbols(alphabet);
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += alphabet.name(w[i]);
  }
  return out;
}

std::string format_tuple(const Alphabet& alphabet, const WordTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ", ";
    out += t[i].empty() ? "ε" : format_word(alphabet, t[i]);
  }
  return out + ")";
}

}  // namespace mondec
