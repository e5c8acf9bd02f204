#ifndef QSA_CLI_HPP_
#define QSA_CLI_HPP_

#include <iosfwd>

namespace qsa {

/// Entry point of the `qsa` tool. Subcommands: generate, scan-ec, search,
/// attack, fig1, fig2, fig3. Returns 0 on success, 2 on usage errors and 1
/// on runtime errors (diagnostics go to `err`).
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qsa

#endif
