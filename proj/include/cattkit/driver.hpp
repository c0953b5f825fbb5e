#pragma once

// Command implementations shared by the C API and the CLI. Each command
// returns an exit status together with its stdout and stderr text.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "cattkit/batanin.hpp"
#include "cattkit/gsett.hpp"

namespace cattkit::driver {

enum class Format { Text, Json };

enum Status : int { Ok = 0, CheckFailure = 1, ParseFailure = 2, InternalFailure = 3 };

struct Outcome {
  int status = Ok;
  std::string out;
  std::string err;
};

/// Parse errors and name-resolution errors are parse failures; invariant
/// breaches are internal failures; everything else is a check failure.
Status status_of(ErrorKind kind);

/// `origin` prefixes diagnostics (usually the file name).
Outcome check(std::string_view source, Format format, Theory theory = Theory::CaTT,
              std::string_view origin = "<input>");
Outcome translate(std::string_view source, Format format, std::string_view origin = "<input>");
/// `spec` is a tree `br[...]`, a zigzag `(0,1,0)`, a pasting context
/// `(x : *, ...)` or a globular-set JSON object. `to` is one of tree, zigzag,
/// psctx, globset; without it all four are printed.
Outcome tree(std::string_view spec, std::optional<std::string> to, Format format);
/// Reads any of the four tree encodings accepted by `tree`.
BataninTree read_tree(std::string_view spec);
/// `to` is one of tree, zigzag, psctx, globset.
std::string write_tree(const BataninTree& b, std::string_view to);

/// Source files (or computad JSON, when the text starts with `{`).
Outcome roundtrip(std::string_view source, Format format, std::string_view origin = "<input>");
Outcome enumerate(std::size_t positions, bool exact, Format format);

/// CATTKIT_MAX_POSITIONS, default 9.
std::size_t max_positions();

}  // namespace cattkit::driver
