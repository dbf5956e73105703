#pragma once

#include <iosfwd>

namespace rio {

/// Self-check suite behind the `verify` CLI subcommand: the exhaustive
/// forced-outcome table over all four channels, operator-algebra properties,
/// beam-splitter and Kerr algebra, the erfc cross-check, and the multiparty
/// reductions. Prints one line per section; returns the number of failures.
int run_verify_suite(std::ostream& out);

}  // namespace rio
