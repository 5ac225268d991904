#pragma once

#include "labelcut/instance.hpp"

#include <string>

namespace labelcut {

// Text format, bit exact:
//   labelcut 1
//   <n> <m> <q> <s> <t> <directed:0|1>
//   <u> <v> <label>        (m lines)
// All ids zero-based decimal, single-space separated, newline-terminated,
// no trailing whitespace. Lines starting with '#' are ignored on input.
std::string emit_instance(const Instance& inst);

// Throws ParseError (with line number) on malformed input and VersionError
// when the header names an unknown version.
Instance parse_instance(const std::string& text);

Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace labelcut
