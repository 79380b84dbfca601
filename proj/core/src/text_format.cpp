#include "mondec/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>

namespace mondec {

namespace {

std::string_view trim_view(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::size_t parse_count(std::size_t line, std::string_view tok, const char* what) {
  std::size_t value = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || p != tok.data() + tok.size())
    throw ParseError(line, std::string("expected a non-negative integer for ") + what + ", got '" +
                               std::string(tok) + "'");
  return value;
}

// Splits "(x,y,(p,q))" into its top-level entries.
std::vector<std::string> split_tuple(std::size_t line, std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.size() < 2 || compact.front() != '(' || compact.back() != ')')
    throw ParseError(line, "letter must be a parenthesized tuple, got '" + compact + "'");
  std::vector<std::string> entries;
  std::string current;
  int depth = 0;
  for (std::size_t i = 1; i + 1 < compact.size(); ++i) {
    char c = compact[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (--depth < 0) throw ParseError(line, "unbalanced parentheses in '" + compact + "'");
    }
    if (c == ',' && depth == 0) {
      entries.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (depth != 0) throw ParseError(line, "unbalanced parentheses in '" + compact + "'");
  entries.push_back(current);
  return entries;
}

}  // namespace

Automaton parse_automaton(std::istream& in) {
  std::optional<std::size_t> arity;
  std::optional<std::vector<std::string>> symbols;
  std::optional<std::string> pad;
  std::optional<AutomatonBuilder> builder;
  bool have_initial = false;

  auto require_builder = [&](std::size_t line, const std::string& keyword) -> AutomatonBuilder& {
    if (!builder) throw ParseError(line, "'" + keyword + "' must come after 'states'");
    return *builder;
  };

  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view text = trim_view(raw);
    if (text.empty() || text.front() == '#') continue;
    auto space = text.find_first_of(" \t");
    std::string keyword(text.substr(0, space));
    std::string_view rest = space == std::string_view::npos ? std::string_view{} : trim_view(text.substr(space));

    if (keyword == "arity") {
      if (arity) throw ParseError(line, "duplicate 'arity'");
      arity = parse_count(line, rest, "arity");
      if (*arity == 0) throw ParseError(line, "arity must be at least 1");
    } else if (keyword == "alphabet") {
      if (symbols) throw ParseError(line, "duplicate 'alphabet'");
      symbols = split_ws(rest);
      if (symbols->empty()) throw ParseError(line, "alphabet must list at least one symbol");
    } else if (keyword == "pad") {
      if (pad) throw ParseError(line, "duplicate 'pad'");
      auto toks = split_ws(rest);
      if (toks.size() != 1) throw ParseError(line, "'pad' takes exactly one symbol");
      pad = toks[0];
    } else if (keyword == "states") {
      if (builder) throw ParseError(line, "duplicate 'states'");
      if (!arity || !symbols || !pad)
        throw ParseError(line, "'states' must come after 'arity', 'alphabet' and 'pad'");
      std::size_t count = parse_count(line, rest, "states");
      if (count == 0) throw ParseError(line, "an automaton needs at least one state");
      try {
        builder.emplace(*arity, Alphabet(*symbols, *pad));
      } catch (const Error& e) {
        throw ParseError(line, e.what());
      }
      for (std::size_t i = 0; i < count; ++i) builder->add_state(false);
    } else if (keyword == "initial") {
      auto& b = require_builder(line, keyword);
      if (have_initial) throw ParseError(line, "duplicate 'initial'");
      std::size_t s = parse_count(line, rest, "initial");
      if (s >= b.num_states()) throw ParseError(line, "initial state out of range");
      b.set_initial(static_cast<State>(s));
      have_initial = true;
    } else if (keyword == "final") {
      auto& b = require_builder(line, keyword);
      for (const auto& tok : split_ws(rest)) {
        std::size_t s = parse_count(line, tok, "final");
        if (s >= b.num_states()) throw ParseError(line, "final state " + tok + " out of range");
        b.set_final(static_cast<State>(s));
      }
    } else if (keyword == "trans") {
      auto& b = require_builder(line, keyword);
      auto open = rest.find('(');
      auto close = rest.rfind(')');
      if (open == std::string_view::npos || close == std::string_view::npos || close < open)
        throw ParseError(line, "expected 'trans <from> (<letter>) <to>'");
      std::size_t from = parse_count(line, trim_view(rest.substr(0, open)), "source state");
      std::size_t to = parse_count(line, trim_view(rest.substr(close + 1)), "target state");
      if (from >= b.num_states() || to >= b.num_states()) throw ParseError(line, "state out of range");
      auto entries = split_tuple(line, rest.substr(open, close - open + 1));
      if (entries.size() != b.arity())
        throw ParseError(line, "letter has " + std::to_string(entries.size()) + " entries, arity is " +
                                   std::to_string(b.arity()));
      ColumnLetter letter;
      for (const auto& e : entries) {
        auto sym = b.alphabet().find(e);
        if (!sym) throw ParseError(line, "unknown symbol '" + e + "'");
        letter.entries.push_back(*sym);
      }
      if (std::all_of(letter.entries.begin(), letter.entries.end(),
                      [&](Symbol s) { return b.alphabet().is_pad(s); }))
        throw ParseError(line, "the all-pad letter cannot label a transition");
      b.add_transition(static_cast<State>(from), letter, static_cast<State>(to));
    } else {
      throw ParseError(line, "unknown declaration '" + keyword + "'");
    }
  }
  if (!builder) throw ParseError(line, "missing 'states' declaration");
  if (!have_initial) throw ParseError(line, "missing 'initial' declaration");
  return std::move(*builder).build();
}

Automaton parse_automaton(const std::string& text) {
  std::istringstream in(text);
  return parse_automaton(in);
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_automaton(in);
}

std::string format_letter(const Automaton& a, Letter code) {
  std::string out = "(";
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (i > 0) out += ',';
    out += a.alphabet().name(a.codec().entry(code, i));
  }
  return out + ")";
}

std::string print_automaton(const Automaton& a) {
  std::ostringstream out;
  out << "arity " << a.arity() << '\n';
  out << "alphabet";
  for (const auto& s : a.alphabet().symbols()) out << ' ' << s;
  out << '\n';
  out << "pad " << a.alphabet().pad_name() << '\n';
  out << "states " << a.num_states() << '\n';
  out << "initial " << a.initial() << '\n';
  auto finals = a.finals();
  if (!finals.empty()) {
    out << "final";
    for (State s : finals) out << ' ' << s;
    out << '\n';
  }
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& t : a.transitions(s))
      out << "trans " << s << ' ' << format_letter(a, t.letter) << ' ' << t.target << '\n';
  return out.str();
}

void save_automaton(const Automaton& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << print_automaton(a);
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const Automaton& a, const DotOptions& options) {
  std::ostringstream out;
  out << "// arity " << a.arity() << ", alphabet {";
  for (std::size_t i = 0; i < a.alphabet().size(); ++i) out << (i ? "," : "") << a.alphabet().symbols()[i];
  out << "}, pad " << a.alphabet().pad_name() << '\n';
  for (const auto& note : options.notes) out << "// " << note << '\n';
  out << "digraph \"" << dot_escape(options.name) << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  out << "  start [shape=point];\n";
  for (State s = 0; s < a.num_states(); ++s)
    out << "  " << s << (a.is_final(s) ? " [shape=doublecircle]" : "") << ";\n";
  out << "  start -> " << a.initial() << ";\n";
  for (State s = 0; s < a.num_states(); ++s)
    for (const auto& t : a.transitions(s))
      out << "  " << s << " -> " << t.target << " [label=\"" << dot_escape(format_letter(a, t.letter))
          << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace mondec
