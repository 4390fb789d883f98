#include "freeharm/cayley_ball.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "freeharm/errors.hpp"

namespace freeharm {

CayleyBall::CayleyBall(int num_generators, int radius, std::vector<Word> elements)
    : num_generators_(num_generators), radius_(radius), elements_(std::move(elements)) {}

std::optional<std::uint32_t> CayleyBall::index_of(const Word& w) const {
    if (w.length() > static_cast<std::size_t>(radius_)) return std::nullopt;
    if (w.max_generator_index() > num_generators_) return std::nullopt;
    auto it = std::lower_bound(elements_.begin(), elements_.end(), w, shortlex_less);
    if (it == elements_.end() || !(*it == w)) return std::nullopt;
    return static_cast<std::uint32_t>(it - elements_.begin());
}

std::uint64_t CayleyBall::size_formula(int num_generators, int radius, std::uint64_t cap) {
    if (num_generators < 1) throw std::invalid_argument("need at least one generator");
    if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
    // Sphere sizes: |S_0| = 1, |S_1| = 2N, |S_{k+1}| = |S_k| (2N-1).
    unsigned __int128 total = 1;
    unsigned __int128 sphere = 1;
    for (int k = 1; k <= radius; ++k) {
        sphere *= (k == 1) ? 2u * num_generators : 2u * num_generators - 1;
        total += sphere;
        if (total > cap)
            throw ResourceError("Cayley ball size exceeds cap of " + std::to_string(cap) +
                                " elements (N=" + std::to_string(num_generators) +
                                ", r=" + std::to_string(radius) + ")");
    }
    return static_cast<std::uint64_t>(total);
}

CayleyBall enumerate_ball(int num_generators, int radius, std::uint64_t cap) {
    const std::uint64_t expected = CayleyBall::size_formula(num_generators, radius, cap);

    std::vector<Word> elements;
    elements.reserve(expected);
    elements.push_back(Word::identity());

    std::size_t level_begin = 0;
    for (int level = 0; level < radius; ++level) {
        const std::size_t level_end = elements.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            const std::int32_t last =
                elements[i].is_identity() ? 0 : elements[i].letters().back();
            for (int g = 1; g <= num_generators; ++g) {
                for (std::int32_t letter : {static_cast<std::int32_t>(g),
                                            static_cast<std::int32_t>(-g)}) {
                    if (last == -letter) continue;
                    elements.push_back(elements[i] * Word::generator(g, letter > 0 ? 1 : -1));
                }
            }
        }
        level_begin = level_end;
    }

    if (elements.size() != expected)
        throw std::logic_error("ball enumeration disagrees with closed formula");
    return CayleyBall(num_generators, radius, std::move(elements));
}

} // namespace freeharm
