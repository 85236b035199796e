#ifndef RGDUAL_CLI_HPP
#define RGDUAL_CLI_HPP

#include <ostream>

namespace rgdual {

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int negative = 1;       // iso: not isomorphic; check: a property failed
inline constexpr int bad_input = 2;      // usage, parse or validation failure
inline constexpr int precondition = 3;   // e.g. rotation output for a non-orientable map
}  // namespace exit_code

/// Entry point of the rgdual tool. Results go to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rgdual

#endif  // RGDUAL_CLI_HPP
