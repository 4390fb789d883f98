#include "freeharm/element_set.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "freeharm/cayley_ball.hpp"
#include "freeharm/errors.hpp"

namespace freeharm {

GroupElementSet::GroupElementSet(std::vector<Word> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end(), shortlex_less);
    auto dup = std::adjacent_find(elements_.begin(), elements_.end());
    if (dup != elements_.end())
        throw std::invalid_argument("duplicate element in set: " + format_word(*dup));
}

bool GroupElementSet::contains_identity() const {
    return !elements_.empty() && elements_.front().is_identity();
}

bool GroupElementSet::contains(const Word& w) const {
    return std::binary_search(elements_.begin(), elements_.end(), w, shortlex_less);
}

std::size_t GroupElementSet::max_word_length() const {
    std::size_t m = 0;
    for (const auto& w : elements_) m = std::max(m, w.length());
    return m;
}

int GroupElementSet::max_generator_index() const {
    int m = 0;
    for (const auto& w : elements_) m = std::max(m, w.max_generator_index());
    return m;
}

GroupElementSet GroupElementSet::translated(const Word& g) const {
    std::vector<Word> out;
    out.reserve(elements_.size());
    for (const auto& w : elements_) out.push_back(g * w);
    return GroupElementSet(std::move(out));
}

SetFamily parse_family_name(std::string_view name) {
    if (name == "generators") return SetFamily::Generators;
    if (name == "generators-and-inverses") return SetFamily::GeneratorsAndInverses;
    if (name == "words-of-length-n") return SetFamily::WordsOfLengthN;
    if (name == "upper-triangular-weak") return SetFamily::UpperTriangularWeak;
    if (name == "upper-triangular-strict") return SetFamily::UpperTriangularStrict;
    throw std::invalid_argument("unsupported family tag: " + std::string(name));
}

std::string family_name(SetFamily family) {
    switch (family) {
        case SetFamily::Generators: return "generators";
        case SetFamily::GeneratorsAndInverses: return "generators-and-inverses";
        case SetFamily::WordsOfLengthN: return "words-of-length-n";
        case SetFamily::UpperTriangularWeak: return "upper-triangular-weak";
        case SetFamily::UpperTriangularStrict: return "upper-triangular-strict";
    }
    throw std::invalid_argument("unsupported family tag");
}

GroupElementSet generate_family(const SetFamilySpec& spec) {
    if (spec.k < 1) throw std::invalid_argument("family size parameter k must be >= 1");
    std::vector<Word> words;
    switch (spec.family) {
        case SetFamily::Generators:
            for (int i = 1; i <= spec.k; ++i) words.push_back(Word::generator(i));
            break;
        case SetFamily::GeneratorsAndInverses:
            for (int i = 1; i <= spec.k; ++i) {
                words.push_back(Word::generator(i));
                words.push_back(Word::generator(i, -1));
            }
            break;
        case SetFamily::WordsOfLengthN: {
            if (spec.n < 0) throw std::invalid_argument("word length n must be >= 0");
            const CayleyBall ball = enumerate_ball(spec.k, spec.n);
            for (const auto& w : ball.elements())
                if (w.length() == static_cast<std::size_t>(spec.n)) words.push_back(w);
            break;
        }
        case SetFamily::UpperTriangularWeak:
            words.push_back(Word::identity()); // every i = j collapses to e
            [[fallthrough]];
        case SetFamily::UpperTriangularStrict:
            for (int i = 1; i <= spec.k; ++i)
                for (int j = i + 1; j <= spec.k; ++j)
                    words.push_back(Word::generator(i) * Word::generator(j, -1));
            break;
    }
    return GroupElementSet(std::move(words));
}

GroupElementSet read_set(std::istream& in) {
    std::vector<Word> words;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        words.push_back(parse_word(line));
    }
    return GroupElementSet(std::move(words));
}

GroupElementSet read_set_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open set file: " + path);
    return read_set(in);
}

void write_set(std::ostream& out, const GroupElementSet& set) {
    for (const auto& w : set.elements()) out << format_word(w) << '\n';
}

} // namespace freeharm
