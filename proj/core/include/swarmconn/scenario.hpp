#pragma once

#include <filesystem>
#include <string>

#include "swarmconn/simulator.hpp"

namespace swarmconn {

/// A scenario file resolved into a runnable configuration.
///
/// Scenario files are sectioned key = value text. Sections [graph],
/// [potential], [controller], and [sim] are required; [domain] and
/// [disturbance] are optional. '#' starts a comment line. Unknown sections,
/// unknown keys, and duplicates are rejected. The keys spread_limit, gain,
/// input_bound, magnitude, and dt accept the word `auto`, which resolves to
/// the largest admissible spread, the graph constant, the admissible
/// disturbance level, the input bound, and the largest stable step.
struct ScenarioConfig {
    SimConfig sim;
    std::string output_path;  // trace destination named by the file; empty when absent
    std::string table_path;   // absolute path of a tabulated weight profile; empty for built-ins
};

/// Parses scenario text. Relative table paths resolve against base_dir.
/// Throws ConfigError with a line reference on any defect.
ScenarioConfig parse_scenario(const std::string& text, const std::filesystem::path& base_dir = ".");

/// Reads and parses a scenario file; relative table paths resolve against
/// the file's directory.
ScenarioConfig load_scenario(const std::string& path);

/// Canonical text form: fixed section and key order, every `auto` replaced
/// by its resolved value, floats at 17 significant digits. Parsing the
/// result reproduces the same configuration, and normalizing again
/// reproduces the same text.
std::string normalize_scenario(const ScenarioConfig& cfg);

}  // namespace swarmconn
