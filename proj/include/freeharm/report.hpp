#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "freeharm/cayley_ball.hpp"
#include "freeharm/convolution.hpp"
#include "freeharm/leinert.hpp"
#include "freeharm/power_iteration.hpp"
#include "freeharm/rng.hpp"

namespace freeharm {

enum class OutputFormat { human, json, csv };

/// Effective configuration of a run. Every report echoes it, defaults
/// included, so identical configs reproduce byte-identical json/csv output.
struct RunConfig {
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultNormTol;
    std::uint64_t ball_cap = kDefaultBallCap;
    std::uint64_t state_cap = kDefaultStateCap;
    std::uint64_t entry_cap = kDefaultEntryCap;
    OutputFormat format = OutputFormat::human;

    /// One knob for all caps: ball = cap, states = 2 cap, entries = 40 cap.
    void set_master_cap(std::uint64_t cap);

    nlohmann::json to_json() const;
    /// "# key = value" comment lines for human/csv headers.
    std::string header(const std::string& prefix = "# ") const;
};

/// Shortest decimal rendering that round-trips a double.
std::string format_double(double value);

} // namespace freeharm
