#include "freeharm/leinert.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "freeharm/errors.hpp"

namespace freeharm {

Word alternating_product(const std::vector<Word>& xs) {
    Word p;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        p = (i % 2 == 0) ? p * xs[i] : p * xs[i].inverse();
    }
    return p;
}

bool verify_witness(const std::vector<Word>& xs, const GroupElementSet& set) {
    if (xs.size() < 2 || xs.size() % 2 != 0) return false;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (!set.contains(xs[i])) return false;
        if (i + 1 < xs.size() && xs[i] == xs[i + 1]) return false;
    }
    return alternating_product(xs).is_identity();
}

namespace {

struct SearchState {
    Word product;
    std::int32_t last;    // index into set elements, -1 at the root
    std::uint32_t parent; // index into the previous level
};

struct StateKeyHash {
    std::size_t operator()(const std::pair<Word, std::int32_t>& key) const noexcept {
        return WordHash{}(key.first) * 31 + static_cast<std::size_t>(key.second + 1);
    }
};

} // namespace

LeinertVerdict check_leinert_condition(const GroupElementSet& set, int max_depth,
                                       std::uint64_t state_cap) {
    if (set.empty()) throw std::invalid_argument("set must be nonempty");
    if (max_depth < 1) throw std::invalid_argument("max_depth must be >= 1");

    const auto& elems = set.elements();
    const std::size_t max_len = set.max_word_length();
    const int total_steps = 2 * max_depth;

    std::vector<std::vector<SearchState>> levels(1);
    levels[0].push_back(SearchState{Word::identity(), -1, 0});
    std::uint64_t retained = 1;

    for (int step = 1; step <= total_steps; ++step) {
        const bool inverted = (step % 2 == 0);
        const std::size_t remaining = static_cast<std::size_t>(total_steps - step);
        const auto& prev = levels.back();
        std::vector<SearchState> next;
        std::unordered_map<std::pair<Word, std::int32_t>, std::uint32_t, StateKeyHash> seen;

        for (std::uint32_t pi = 0; pi < prev.size(); ++pi) {
            for (std::int32_t j = 0; j < static_cast<std::int32_t>(elems.size()); ++j) {
                if (j == prev[pi].last) continue;
                Word product = inverted ? prev[pi].product * elems[j].inverse()
                                        : prev[pi].product * elems[j];
                // A factor shortens the product by at most max_len, so anything
                // longer than remaining * max_len can never reach the identity.
                if (product.length() > remaining * max_len) continue;
                auto key = std::make_pair(std::move(product), j);
                if (seen.count(key)) continue;
                if (++retained > state_cap)
                    throw ResourceError("Leinert search exceeded state cap of " +
                                        std::to_string(state_cap));
                seen.emplace(key, static_cast<std::uint32_t>(next.size()));
                next.push_back(SearchState{std::move(key.first), j, pi});
            }
        }
        levels.push_back(std::move(next));

        if (inverted) {
            for (std::uint32_t si = 0; si < levels[step].size(); ++si) {
                if (!levels[step][si].product.is_identity()) continue;
                std::vector<Word> witness(step);
                std::uint32_t idx = si;
                for (int l = step; l >= 1; --l) {
                    witness[l - 1] = elems[levels[l][idx].last];
                    idx = levels[l][idx].parent;
                }
                if (!verify_witness(witness, set))
                    throw std::logic_error("internal error: emitted witness failed verification");
                return LeinertVerdict{true, step / 2, std::move(witness)};
            }
        }
    }
    return LeinertVerdict{false, max_depth, {}};
}

} // namespace freeharm
