#include "freeharm/word.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "freeharm/errors.hpp"

namespace freeharm {

namespace {

// Total order on letters matching ball-enumeration order: x1, x1^{-1}, x2, ...
inline std::uint32_t letter_rank(std::int32_t letter) {
    const std::uint32_t idx = static_cast<std::uint32_t>(letter > 0 ? letter : -letter);
    return 2 * idx - (letter > 0 ? 1 : 0);
}

constexpr long kMaxExponentMagnitude = 1'000'000;

} // namespace

Word Word::generator(int index, int sign) {
    if (index < 1) throw std::invalid_argument("generator index must be >= 1");
    if (sign != 1 && sign != -1) throw std::invalid_argument("generator sign must be +1 or -1");
    Word w;
    w.letters_.push_back(sign > 0 ? index : -index);
    return w;
}

Word Word::from_letters(const std::vector<std::int32_t>& letters) {
    Word w;
    w.letters_.reserve(letters.size());
    for (std::int32_t l : letters) {
        if (l == 0) throw std::invalid_argument("letter index 0 is invalid");
        if (!w.letters_.empty() && w.letters_.back() == -l) {
            w.letters_.pop_back();
        } else {
            w.letters_.push_back(l);
        }
    }
    return w;
}

int Word::max_generator_index() const {
    int m = 0;
    for (std::int32_t l : letters_) m = std::max(m, l > 0 ? l : -l);
    return m;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(-*it);
    return w;
}

Word operator*(const Word& lhs, const Word& rhs) {
    Word out;
    out.letters_.reserve(lhs.letters_.size() + rhs.letters_.size());
    out.letters_ = lhs.letters_;
    for (std::int32_t l : rhs.letters_) {
        if (!out.letters_.empty() && out.letters_.back() == -l) {
            out.letters_.pop_back();
        } else {
            out.letters_.push_back(l);
        }
    }
    return out;
}

bool shortlex_less(const Word& a, const Word& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    const auto& la = a.letters();
    const auto& lb = b.letters();
    for (std::size_t i = 0; i < la.size(); ++i) {
        if (la[i] != lb[i]) return letter_rank(la[i]) < letter_rank(lb[i]);
    }
    return false;
}

std::size_t WordHash::operator()(const Word& w) const noexcept {
    // FNV-1a over the letter stream.
    std::uint64_t h = 1469598103934665603ULL;
    for (std::int32_t l : w.letters_) {
        std::uint32_t u = static_cast<std::uint32_t>(l);
        for (int byte = 0; byte < 4; ++byte) {
            h ^= (u >> (8 * byte)) & 0xFFu;
            h *= 1099511628211ULL;
        }
    }
    return static_cast<std::size_t>(h);
}

namespace {

struct Scanner {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() const { return text[pos]; }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos); }

    long parse_int(bool allow_sign) {
        skip_ws();
        bool negative = false;
        if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
            negative = text[pos] == '-';
            ++pos;
        }
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
            fail("expected integer");
        long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > kMaxExponentMagnitude) fail("integer too large");
            ++pos;
        }
        return negative ? -value : value;
    }
};

} // namespace

Word parse_word(std::string_view text) {
    Scanner sc{text};
    sc.skip_ws();
    if (sc.done()) sc.fail("empty input");

    if (sc.peek() == 'e') {
        ++sc.pos;
        if (!sc.done()) sc.fail("unexpected input after identity");
        return Word::identity();
    }

    std::vector<std::int32_t> letters;
    while (true) {
        sc.skip_ws();
        if (sc.done() || sc.peek() != 'x') sc.fail("expected generator 'x'");
        ++sc.pos;
        const long index = sc.parse_int(false);
        if (index < 1) sc.fail("generator index must be >= 1");
        long exponent = 1;
        sc.skip_ws();
        if (!sc.done() && sc.peek() == '^') {
            ++sc.pos;
            exponent = sc.parse_int(true);
        }
        const std::int32_t letter =
            exponent >= 0 ? static_cast<std::int32_t>(index) : -static_cast<std::int32_t>(index);
        for (long k = 0; k < std::labs(exponent); ++k) letters.push_back(letter);

        if (sc.done()) break;
        if (sc.peek() != '*') sc.fail("expected '*' between terms");
        ++sc.pos;
    }
    return Word::from_letters(letters);
}

std::string format_word(const Word& w) {
    if (w.is_identity()) return "e";
    std::string out;
    const auto& letters = w.letters();
    std::size_t i = 0;
    while (i < letters.size()) {
        std::size_t j = i;
        while (j < letters.size() && letters[j] == letters[i]) ++j;
        const long run = static_cast<long>(j - i);
        const std::int32_t l = letters[i];
        if (!out.empty()) out += '*';
        out += 'x';
        out += std::to_string(l > 0 ? l : -l);
        const long exponent = l > 0 ? run : -run;
        if (exponent != 1) {
            out += '^';
            out += std::to_string(exponent);
        }
        i = j;
    }
    return out;
}

} // namespace freeharm
