#pragma once

#include <iosfwd>
#include <string>

#include "swarmconn/verifier.hpp"

namespace swarmconn {

// Entry points behind the CLI subcommands, separated from argv handling so
// tests can drive them directly. Shared exit-code convention: 0 success,
// 1 a check failed or the run hit a flagged violation, 2 the input could not
// be parsed or broke a hard invariant.
//
// The environment variable SWARMCONN_SEED, when set to an unsigned integer,
// overrides the run seed (simulate) and the sweep seed (verify).

/// Validates a scenario against every load-time constraint and prints the
/// report. With dump_normalized, appends the canonical scenario text.
int cmd_check(const std::string& scenario_path, bool dump_normalized, std::ostream& out);

/// Runs a scenario and writes the trace CSV. Destination precedence:
/// output_override argument, then the scenario's output key, then trace.csv.
/// Constraint failures are reported but do not stop the run; flagged
/// violations exit 1.
int cmd_simulate(const std::string& scenario_path, const std::string& output_override, std::ostream& out);

/// Runs the Monte-Carlo fact sweep and prints one report line per fact,
/// optionally also writing them as CSV.
int cmd_verify(const VerifyOptions& opts, const std::string& csv_path, std::ostream& out);

/// Prints the spread-limit ratio of the two built-in potential kinds for
/// edge counts 1..m_max and checks its shape: exactly 1 at one edge, then
/// strictly decreasing.
int cmd_ratio(int m_max, const std::string& csv_path, std::ostream& out);

}  // namespace swarmconn
