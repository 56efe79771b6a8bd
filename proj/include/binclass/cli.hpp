#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace binclass::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // parse failure in strict mode, degenerate input
inline constexpr int kExitUsage = 2;

/**
 * Entry point of the `binclass` tool. `args` excludes the program name.
 *
 *   binclass evaluate <input> [options]   metrics at a fixed decision rule
 *   binclass roc <input> [options]        ROC curve, AUC, optional SVG
 *
 * `<input>` of "-" reads `in`. Results go to `out`, diagnostics to `err`.
 * Returns the process exit status.
 */
int run(std::span<const std::string> args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace binclass::cli
