#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "freeharm/word.hpp"

namespace freeharm {

inline constexpr std::uint64_t kDefaultBallCap = 5'000'000;

/// All reduced words of length <= radius in F_N, in shortlex order, together
/// with a total index. Serves as the finite truncation domain for compressed
/// convolution operators.
class CayleyBall {
public:
    CayleyBall(int num_generators, int radius, std::vector<Word> elements);

    int num_generators() const noexcept { return num_generators_; }
    int radius() const noexcept { return radius_; }
    std::size_t size() const noexcept { return elements_.size(); }
    const std::vector<Word>& elements() const noexcept { return elements_; }
    const Word& element(std::size_t i) const { return elements_[i]; }

    /// Index of w in the ball, or nullopt when |w| > radius or w uses a
    /// generator index beyond num_generators. Binary search over the
    /// shortlex-sorted element list.
    std::optional<std::uint32_t> index_of(const Word& w) const;

    /// |B_r| from the closed formula: 2r+1 for N = 1, else
    /// 1 + 2N((2N-1)^r - 1)/(2N-2). Throws ResourceError when the count
    /// exceeds cap.
    static std::uint64_t size_formula(int num_generators, int radius,
                                      std::uint64_t cap = kDefaultBallCap);

private:
    int num_generators_;
    int radius_;
    std::vector<Word> elements_;
};

/// Breadth-first enumeration over right multiplication with last-letter
/// exclusion; every reduced word of length <= radius appears exactly once.
CayleyBall enumerate_ball(int num_generators, int radius,
                          std::uint64_t cap = kDefaultBallCap);

} // namespace freeharm
