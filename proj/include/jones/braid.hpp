#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace jones {

// A braid word on n strands. Letter g stands for the generator sigma_{|g|}
// crossed positively when g > 0 and negatively when g < 0. The empty word is
// the identity braid. n_strands is explicit so that padding strands (which
// change the closure by disjoint unknots) are expressible.
struct BraidWord {
    int n_strands = 2;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls); // validates, throws std::invalid_argument

    bool empty() const { return letters.empty(); }
    std::size_t size() const { return letters.size(); }

    bool operator==(const BraidWord&) const = default;
};

// Parses whitespace- or comma-separated signed generator indices.
// Blank text yields the identity braid.
BraidWord parse_braid(const std::string& text, int n_strands);

// Sum of crossing signs, I(b) in the trace formula.
int exponent_sum(const BraidWord& b);

BraidWord concat(const BraidWord& a, const BraidWord& b);
BraidWord inverse(const BraidWord& b);

// Same letters on a wider braid group; the closure gains disjoint unknots.
BraidWord embed(const BraidWord& b, int n_strands);

struct ClosureInfo {
    std::vector<int> permutation; // permutation[i] = bottom position of the strand entering at top i (0-based)
    int components;               // cycle count = link components of the closure
};

ClosureInfo closure_permutation(const BraidWord& b);

std::string to_string(const BraidWord& b);

} // namespace jones
