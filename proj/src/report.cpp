#include "freeharm/report.hpp"

#include <charconv>

namespace freeharm {

void RunConfig::set_master_cap(std::uint64_t cap) {
    ball_cap = cap;
    state_cap = 2 * cap;
    entry_cap = 40 * cap;
}

nlohmann::json RunConfig::to_json() const {
    return nlohmann::json{
        {"seed", seed},
        {"tol", tol},
        {"ball_cap", ball_cap},
        {"state_cap", state_cap},
        {"entry_cap", entry_cap},
    };
}

std::string RunConfig::header(const std::string& prefix) const {
    std::string out;
    out += prefix + "seed = " + std::to_string(seed) + "\n";
    out += prefix + "tol = " + format_double(tol) + "\n";
    out += prefix + "ball_cap = " + std::to_string(ball_cap) + "\n";
    out += prefix + "state_cap = " + std::to_string(state_cap) + "\n";
    out += prefix + "entry_cap = " + std::to_string(entry_cap) + "\n";
    return out;
}

std::string format_double(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace freeharm
