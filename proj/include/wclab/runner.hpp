#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wclab/jones.hpp"
#include "wclab/potential.hpp"

namespace wclab {

enum class Command { Jones, Potential, Solve, Volume, Tv, Asymptote, Audit, Check };
enum class OutputFormat { Csv, Json };

// One batch run.  Ranges are inclusive lists; empty color/N lists fall
// back to single defaults where a command allows it.  The default output
// directory comes from WCLAB_OUTPUT_DIR (falling back to ".").
struct RunConfig {
    Command command = Command::Jones;
    ChainSpec spec;
    bool whitehead = true;  // WL = W_{0,1,1,0}; false: use spec as given

    std::vector<int> belt_colors;    // M1 values
    std::vector<int> clasp_colors;   // M2 values
    std::vector<int> orders;         // N values
    std::vector<int> levels;         // r values (tv/audit)

    double s1 = 1.0;
    double s2 = 1.0;
    Sign sign = Sign::Plus;
    int continuation_steps = 10;
    std::optional<std::vector<double>> z0;  // interleaved re,im pairs

    Precision precision = Precision::Double;
    OutputFormat format = OutputFormat::Csv;
    std::string output_path;  // empty: derive from command + output dir
    std::uint64_t seed = 20240817;  // for the randomized identity checks
};

// Exit status 0 on success, 1 on numeric failure (diagnostic on stderr),
// 2 on configuration error.  Writes the result table plus a JSON metadata
// sidecar (<output>.meta.json) recording the command, the full config
// echo, precision and tolerances, versions and wall time.
int run(const RunConfig& config);

std::string default_output_dir();

}  // namespace wclab
