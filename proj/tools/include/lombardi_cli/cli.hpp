#pragma once

#include <iosfwd>

namespace lombardi::cli {

/// Runs one command line. Returns 0 on success, 2 when the input was valid
/// but no drawing exists or a drawing failed verification, 1 for usage and
/// parse errors. Failure reasons are written to `err` as one JSON object.
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lombardi::cli
