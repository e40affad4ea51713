#pragma once

#include <ostream>

namespace maxwelter {

/// Exit status: 0 success, 1 a verification suite found counterexamples,
/// 2 usage or input error, 3 runtime failure (e.g. memo budget exhausted).
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace maxwelter
