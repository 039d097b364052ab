#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace etaforge::cli {

enum class ExitCode : int { Ok = 0, Mismatch = 1, Error = 2 };

/// Default q-expansion precision when neither a flag nor ETAFORGE_PRECISION is set.
inline constexpr std::size_t kDefaultPrecision = 200;

/// Runs one subcommand. `args` excludes the program name. The report goes to `out`,
/// usage text and diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace etaforge::cli
