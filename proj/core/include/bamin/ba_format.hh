// Reader and writer for the line-based .ba automaton format.
//
//   [init]            zero or more initial-state lines
//   a,[p]->[q]        one transition per line
//   [acc]             zero or more accepting-state lines
//
// Brackets are optional. Without initial lines the source of the first
// transition is initial; without accepting lines every state is accepting.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bamin/automaton.hh"
#include "bamin/lasso.hh"

namespace bamin {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// States are numbered in order of first appearance in the text.
Automaton parse_ba(std::string_view text);

/// Initial lines, then transitions sorted by (symbol, source, target), then
/// accepting lines. State names must be distinct. An automaton without
/// accepting states gets one extra isolated accepting state, and the empty
/// automaton is written as a single state without transitions, so that
/// reading the text back gives the same language.
std::string serialize_ba(const Automaton& a);

Automaton read_ba_file(const std::string& path);
void write_ba_file(const Automaton& a, const std::string& path);

/// Parses "u1,u2;v1,v2" (stem, cycle) against the alphabet of `a`. The
/// stem may be empty; the cycle may not.
Lasso parse_lasso(std::string_view text, const Automaton& a);
std::string format_lasso(const Lasso& w, const Automaton& a);

}  // namespace bamin
