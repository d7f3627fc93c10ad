#pragma once

#include <string>

#include "seqmerit/sequence.hpp"

namespace seqmerit {

// Sequence wire schema:
//   {"alphabet": "pm1" | "roots:m" | "complex",
//    "values": [+-1, ...] (pm1) or [[re, im], ...] (roots:m, complex)}
// Keys are emitted sorted so output is byte-reproducible.
std::string sequence_to_json_text(const Sequence& s);

Sequence sequence_from_json_text(const std::string& text);

// Accepts either the JSON schema above or the compact '+'/'-' string form
// (allowed wherever a binary sequence is expected). Surrounding whitespace
// is ignored.
Sequence parse_sequence_text(const std::string& text);

} // namespace seqmerit
