#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "freeharm/rng.hpp"
#include "freeharm/word.hpp"

namespace freeharm::testing {

/// Random reduced word of exactly the given length.
inline Word random_word(GaussianSource& rng, int length, int num_generators) {
    std::vector<std::int32_t> letters;
    for (int i = 0; i < length; ++i) {
        while (true) {
            const int g = rng.uniform_int(1, num_generators);
            const std::int32_t letter = rng.uniform_int(0, 1) ? g : -g;
            if (!letters.empty() && letters.back() == -letter) continue;
            letters.push_back(letter);
            break;
        }
    }
    return Word::from_letters(letters);
}

/// Independent enumeration oracle: all reduced letter sequences of length
/// <= max_length over N generators, generated by plain recursion into an
/// ordered set. Shares nothing with the breadth-first ball builder.
inline void collect_reduced_words(int num_generators, int max_length,
                                  std::vector<std::int32_t>& current,
                                  std::set<std::vector<std::int32_t>>& out) {
    out.insert(current);
    if (static_cast<int>(current.size()) == max_length) return;
    for (int g = 1; g <= num_generators; ++g) {
        for (std::int32_t letter : {g, -g}) {
            if (!current.empty() && current.back() == -letter) continue;
            current.push_back(letter);
            collect_reduced_words(num_generators, max_length, current, out);
            current.pop_back();
        }
    }
}

inline std::set<std::vector<std::int32_t>> all_reduced_words(int num_generators,
                                                             int max_length) {
    std::set<std::vector<std::int32_t>> out;
    std::vector<std::int32_t> current;
    collect_reduced_words(num_generators, max_length, current, out);
    return out;
}

} // namespace freeharm::testing
