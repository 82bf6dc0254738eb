#pragma once

#include <string>

#include "popmatch/instance.hpp"
#include "popmatch/matching.hpp"

namespace popmatch {

/// Instance text format (UTF-8, line based, '#' starts a comment):
///
///   model one-sided | model two-sided-one-tie | model two-sided-ties k=<int>
///   agents <name>...
///   jobs <name>...
///   <name> : <item> (>|,) <item> ...
///
/// One preference line per agent (and per job when the model is
/// two-sided-ties; job lines are forbidden otherwise). An <item> is a
/// neighbour name or a tie [x y ...]; '>' closes a rank group while ','
/// keeps appending to it, so "b1 > b2, b3" ranks b1 above the tie {b2, b3}.
///
/// Throws ParseError with a 1-based line number on malformed input.
PreferenceInstance parse_instance(const std::string& text);

/// Canonical serialization: names sorted, ties bracketed, groups separated
/// by '>'. parse_instance(serialize_instance(i)) is the identity on the
/// named structure.
std::string serialize_instance(const PreferenceInstance& inst);

/// Matching format: one "agent job" name pair per line, unmatched vertices
/// omitted, '#' comments allowed.
Matching parse_matching(const PreferenceInstance& inst, const std::string& text);

/// One pair per line, sorted by agent name.
std::string serialize_matching(const PreferenceInstance& inst, const Matching& m);

/// Convenience wrappers that read whole files; throw std::runtime_error on
/// I/O failure.
PreferenceInstance load_instance(const std::string& path);
Matching load_matching(const PreferenceInstance& inst, const std::string& path);

}  // namespace popmatch
