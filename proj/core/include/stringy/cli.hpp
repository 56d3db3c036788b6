#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>

namespace stringy {

enum class Command { MirrorTest, Stringy, Twisted, Dims, LemmaSweep, DualitySweep };

Command command_from_string(const std::string& name);
std::string to_string(Command command);

enum class OutputFormat { Text, Json, Csv };

OutputFormat format_from_string(const std::string& name);

// Everything a single invocation needs. The front end fills this from flags;
// command handlers read their parameters from `params` (keys g, n, m, c, d,
// k, count) and complain about missing or senseless ones.
struct RunConfig {
    Command command = Command::MirrorTest;
    std::optional<std::filesystem::path> input_path;
    std::optional<std::filesystem::path> output_path;
    std::optional<std::uint64_t> seed;
    std::map<std::string, std::int64_t> params;
    OutputFormat format = OutputFormat::Text;
};

// Runs one command. The report goes to `out`, or to config.output_path when
// set; diagnostics go to `err`. Returns the process exit code:
//   0  all embedded verdicts pass,
//   1  some check failed,
//   2  usage or parse error.
// Reports are byte-stable for fixed inputs and seeds. Randomized sweeps use
// seed 0 unless one is given, but refuse to write a file without an explicit
// seed (golden outputs must be reproducible from the command line alone).
int run_command(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace stringy
