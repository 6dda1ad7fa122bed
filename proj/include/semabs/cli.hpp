#ifndef SEMABS_CLI_HPP
#define SEMABS_CLI_HPP

namespace semabs {

// Command-line entry point. Exit codes: 0 success / property holds,
// 1 mathematical failure (non-central measure, verification fail, unequal
// quotients), 2 usage, parse, resource, or numerical errors.
int run_cli(int argc, const char* const* argv);

}  // namespace semabs

#endif
