// Text and JSON serialization of states.
//
// The canonical text grammar prints a state as a '+'-joined list of terms,
// each term a '*'-joined list of factors ending in 'vac':
//
//   term     := factor (' * ' factor)*
//   factor   := rational | 's' | 'u^'int | 'h^'int | generator | 'vac'
//   generator:= 'I[a='int',p='int',n='int',pt='(z|w)']' | 'k[p='int',pt='(z|w)']'
//
// print_state emits exactly one rational (and at most one 's') per term, and
// parse_state(print_state(v)) reproduces v bit for bit.  The parser accepts
// arbitrary factor orderings and non-canonical words; it normal orders input.
#pragma once

#include <string>
#include <vector>

#include "gaudin/algebra.hpp"

namespace gaudin {

// Canonical text form; deterministic term and factor order.  Empty state
// prints as "0".
std::string print_state(const State& v);

// Inverse of print_state; throws parse_error with a character position on
// malformed input.  The result carries no coefficient cutoff.
State parse_state(const std::string& text);

// Display form close to conventional notation: one line per term, currents as
// I{a}'..._{n}(z), centrals as k'...(z), u-powers as (z-w)^e, h as hbar^e.
std::string display_state(const State& v);

// JSON object {"tag": tag, "expr": canonical text}.
std::string state_record(const std::string& tag, const State& v);

// Round-trips a state through the canonical text form; used as a self check.
bool roundtrip_ok(const State& v);

}  // namespace gaudin
