#ifndef NUSPECTRA_CLI_COMMANDS_HPP
#define NUSPECTRA_CLI_COMMANDS_HPP

#include <string>
#include <vector>

namespace nuspectra::cli {

// Exit codes: 0 ok, 1 usage error, 2 invalid parameters or domain error,
// 3 verification failure.
int run(int argc, const char* const* argv);

// Convenience wrapper for in-process callers; args excludes the program name.
int run(const std::vector<std::string>& args);

}  // namespace nuspectra::cli

#endif
