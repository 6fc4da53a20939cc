#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "attackecon/sweep.hpp"

namespace attackecon::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidParams = 2;
inline constexpr int kExitFileError = 3;

/// Runs one command line (args excludes the program name). Results go to
/// `out`, diagnostics to `err`; the return value is the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Fixed 6-decimal rendering used by every CSV field; "-0.000000" is
/// normalised to "0.000000".
std::string fixed6(double value);

inline constexpr const char* kGridHeader = "alpha,t,pi1,pi2,action";

void write_grid_csv(const SweepGrid& grid, std::ostream& out);

/// 800x600 SVG: Pi2(t) curves and the flat Pi1 level for up to five alpha
/// rows of the grid, with axes and a legend.
std::string render_payoff_chart(const SweepGrid& grid);

}  // namespace attackecon::cli
