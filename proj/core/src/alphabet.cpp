#include "mondec/alphabet.hpp"

#include <limits>
#include <set>

namespace mondec {

Alphabet::Alphabet(std::vector<std::string> symbols, std::string pad)
    : symbols_(std::move(symbols)), pad_(std::move(pad)) {
  if (symbols_.empty()) throw Error("alphabet must contain at least one symbol");
  if (symbols_.size() >= std::numeric_limits<Symbol>::max())
    throw Error("alphabet too large");
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.empty()) throw Error("empty symbol name");
    if (!seen.insert(s).second) throw Error("duplicate symbol '" + s + "'");
  }
  if (pad_.empty()) throw Error("empty pad name");
  if (seen.contains(pad_)) throw Error("pad '" + pad_ + "' is also an alphabet symbol");
}

const std::string& Alphabet::name(Symbol s) const {
  if (s == pad()) return pad_;
  if (s > pad()) throw Error("symbol index out of range");
  return symbols_[s];
}

std::optional<Symbol> Alphabet::find(std::string_view name) const {
  if (name == pad_) return pad();
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == name) return static_cast<Symbol>(i);
  return std::nullopt;
}

LetterCodec::LetterCodec(std::size_t arity, std::size_t alphabet_size)
    : arity_(arity), base_(alphabet_size + 1), place_(arity) {
  if (arity == 0) throw Error("arity must be at least 1");
  if (arity > 31) throw Error("arity too large");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < arity; ++i) {
    count *= base_;
    if (count > (std::uint64_t{1} << 31)) throw Error("column alphabet too large for this arity");
  }
  count_ = static_cast<Letter>(count);
  Letter p = 1;
  for (std::size_t i = arity; i-- > 0;) {
    place_[i] = p;
    p *= static_cast<Letter>(base_);
  }
  all_pad_ = count_ - 1;
}

Letter LetterCodec::encode(std::span<const Symbol> entries) const {
  if (entries.size() != arity_) throw Error("column letter has wrong arity");
  Letter code = 0;
  for (std::size_t i = 0; i < arity_; ++i) {
    if (entries[i] >= base_) throw Error("column entry out of range");
    code += entries[i] * place_[i];
  }
  return code;
}

ColumnLetter LetterCodec::decode(Letter code) const {
  ColumnLetter c;
  c.entries.resize(arity_);
  for (std::size_t i = 0; i < arity_; ++i) c.entries[i] = entry(code, i);
  return c;
}

Symbol LetterCodec::entry(Letter code, std::size_t tape) const {
  return static_cast<Symbol>((code / place_[tape]) % base_);
}

std::uint32_t LetterCodec::pad_mask(Letter code) const {
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < arity_; ++i)
    if (entry(code, i) == pad()) mask |= 1u << i;
  return mask;
}

std::vector<Letter> LetterCodec::letters() const {
  std::vector<Letter> out;
  out.reserve(count_ - 1);
  for (Letter c = 0; c < count_; ++c)
    if (c != all_pad_) out.push_back(c);
  return out;
}

}  // namespace mondec
