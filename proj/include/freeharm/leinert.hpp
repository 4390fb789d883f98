#pragma once

#include <cstdint>
#include <vector>

#include "freeharm/element_set.hpp"
#include "freeharm/word.hpp"

namespace freeharm {

inline constexpr std::uint64_t kDefaultStateCap = 10'000'000;

/// Outcome of the bounded Leinert-condition search.
///
/// A violation witness is a sequence x_1,...,x_{2n} of elements of E with
/// x_i != x_{i+1} whose alternating product x_1 x_2^{-1} x_3 x_4^{-1} ...
/// x_{2n-1} x_{2n}^{-1} reduces to the identity. A no-violation verdict is
/// explicitly bounded: the set may still violate at some depth > n.
struct LeinertVerdict {
    bool violation = false;
    int depth = 0;              // witness half-length n, or the searched bound
    std::vector<Word> witness;  // 2n words when violation, empty otherwise
};

/// Alternating product x_1 x_2^{-1} x_3 x_4^{-1} ... of a sequence.
Word alternating_product(const std::vector<Word>& xs);

/// True when xs is a well-formed violation witness for E: even length >= 2,
/// every element drawn from E, adjacent elements distinct, and the
/// alternating product reduces to the identity.
bool verify_witness(const std::vector<Word>& xs, const GroupElementSet& set);

/// Breadth-first search over alternating products of length up to
/// 2*max_depth, deduplicating states (running product, last element) per
/// level and pruning branches whose product is too long to cancel in the
/// remaining steps. Emitted witnesses are re-verified by exact word
/// arithmetic. Throws ResourceError when the number of retained states
/// exceeds state_cap.
LeinertVerdict check_leinert_condition(const GroupElementSet& set, int max_depth,
                                       std::uint64_t state_cap = kDefaultStateCap);

} // namespace freeharm
