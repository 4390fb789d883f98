#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace freeharm {

/// Reduced word in a free group with generators x1, x2, ... indexed from 1.
///
/// Letters are stored as signed indices: +i denotes xi, -i denotes xi^{-1}.
/// The stored sequence is always reduced: no letter is followed by its
/// negation. The identity is the empty word and has length 0.
///
/// Words are immutable values; all operations are pure and safe to share
/// across threads.
class Word {
public:
    Word() = default;

    static Word identity() { return Word{}; }

    /// Single-letter word xi (sign = +1) or xi^{-1} (sign = -1).
    static Word generator(int index, int sign = +1);

    /// Reduces an arbitrary letter sequence (signed indices, zeros invalid).
    static Word from_letters(const std::vector<std::int32_t>& letters);

    const std::vector<std::int32_t>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool is_identity() const noexcept { return letters_.empty(); }

    /// Largest generator index appearing in this word (0 for the identity).
    int max_generator_index() const;

    Word inverse() const;

    friend Word operator*(const Word& lhs, const Word& rhs);

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::vector<std::int32_t> letters_;

    friend struct WordHash;
};

/// Shortlex order: length first, then letterwise with x1 < x1^{-1} < x2 < ...
bool shortlex_less(const Word& a, const Word& b);

inline bool operator<(const Word& a, const Word& b) { return shortlex_less(a, b); }

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
};

/// Parses the word grammar
///   word := "e" | term ("*" term)*
///   term := "x" INT ("^" SIGNED_INT)?
/// with INT >= 1 and whitespace ignored. Throws ParseError on malformed
/// input, with the byte position of the offending character.
Word parse_word(std::string_view text);

/// Canonical rendering: runs of equal letters collapse to powers, e.g.
/// "x1^2*x2^-1"; the identity prints as "e". parse_word(format_word(w)) == w.
std::string format_word(const Word& w);

} // namespace freeharm
