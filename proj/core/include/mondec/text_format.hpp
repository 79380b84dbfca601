#pragma once

#include <iosfwd>
#include <string>

#include "mondec/automaton.hpp"

namespace mondec {

/// Raised on malformed automaton text; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Line-oriented automaton format; lines starting with '#' are comments:
//
//   arity 2
//   alphabet a b
//   pad _
//   states 3
//   initial 0
//   final 1
//   trans 0 (a,a) 0
//   trans 0 (_,a) 1
//
// Letters are parenthesized tuples with one entry per tape; entries may be
// nested tuples when the alphabet symbols are themselves tuples, as in
// ((a,_),(b,b)). The all-pad tuple is rejected.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton(const std::string& text);
Automaton load_automaton(const std::string& path);

/// Canonical text: header lines in the order above, one `final` line listing
/// every final state (omitted when there is none), transitions sorted by
/// (source, letter, target).
std::string print_automaton(const Automaton& a);
void save_automaton(const Automaton& a, const std::string& path);

/// Column letter as written in the text format, e.g. "(a,_)".
std::string format_letter(const Automaton& a, Letter code);

struct DotOptions {
  std::string name = "automaton";
  /// Extra comment lines placed in the graph header.
  std::vector<std::string> notes;
};

/// Graphviz export: one node per state, double circles for finals, one edge
/// per transition labelled by its column letter.
std::string to_dot(const Automaton& a, const DotOptions& options = {});

}  // namespace mondec
