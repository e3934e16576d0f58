#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "pureartin/coxeter.hpp"

namespace pureartin::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kInvalidInput = 2, kMissingData = 3 };

/// Signed integers ("1 2 -1") or caret syntax ("s1 s2 s1^-1"), separated by
/// whitespace or commas. An exponent s2^k expands to |k| letters.
ArtinWord parse_word(TypeId type, std::string_view text);

/// Runs one command line (args exclude the program name). Reports go to
/// out, diagnostics to err. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pureartin::cli
