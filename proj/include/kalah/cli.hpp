#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kalah::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;       // bad flags, level, position text, ...
inline constexpr int kExitConnection = 2;  // cannot listen / connect / lost server
inline constexpr int kExitIo = 3;          // unwritable output file

/// Entry point behind the `kalah` executable. argv[0] is the program name.
/// All interaction goes through the given streams so tests can script it.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

/// Same, with the arguments after the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace kalah::cli
