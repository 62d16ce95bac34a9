#pragma once

#include <string>

#include "cohkey/qstate.hpp"

namespace cohkey {

// Structured-text density matrix:
//   dims: 4 4
//   re: <16 numbers, row-major; may continue on following lines>
//   im: <16 numbers, row-major>
// '#' starts a comment.  All three fields are required.  Syntax problems
// raise ParseError and carry file:line positions; a parsed matrix that is
// not a state raises the matching semantic error, also with a position.
TwoQubitState parse_state_text(const std::string& text, const std::string& filename);

TwoQubitState read_state_file(const std::string& path);

}  // namespace cohkey
