#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "freeharm/word.hpp"

namespace freeharm {

/// Finite set of pairwise-distinct reduced words.
class GroupElementSet {
public:
    GroupElementSet() = default;

    /// Orders the words shortlex and rejects duplicates.
    explicit GroupElementSet(std::vector<Word> elements);

    std::size_t size() const noexcept { return elements_.size(); }
    bool empty() const noexcept { return elements_.empty(); }
    const std::vector<Word>& elements() const noexcept { return elements_; }
    bool contains_identity() const;
    bool contains(const Word& w) const;

    /// Longest word in the set (0 for the empty set).
    std::size_t max_word_length() const;
    int max_generator_index() const;

    /// Left translate gE.
    GroupElementSet translated(const Word& g) const;

private:
    std::vector<Word> elements_;
};

enum class SetFamily {
    Generators,            // {x1, ..., xk}
    GeneratorsAndInverses, // {x1^{±1}, ..., xk^{±1}}
    WordsOfLengthN,        // all reduced words of length n in F_k
    UpperTriangularWeak,   // {xi xj^{-1} : 1 <= i <= j <= k}, identity included once
    UpperTriangularStrict, // {xi xj^{-1} : 1 <= i < j <= k}
};

struct SetFamilySpec {
    SetFamily family;
    int k = 1; // number of generators / index bound
    int n = 0; // word length, WordsOfLengthN only
};

/// Maps the CLI spelling ("generators", "upper-triangular-weak", ...) to a
/// family tag; throws std::invalid_argument for unknown names.
SetFamily parse_family_name(std::string_view name);
std::string family_name(SetFamily family);

GroupElementSet generate_family(const SetFamilySpec& spec);

/// Set-file format: one word per line, '#' starts a comment, blank lines
/// ignored.
GroupElementSet read_set(std::istream& in);
GroupElementSet read_set_file(const std::string& path);
void write_set(std::ostream& out, const GroupElementSet& set);

} // namespace freeharm
