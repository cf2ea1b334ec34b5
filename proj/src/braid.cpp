#include "jones/braid.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace jones {

namespace {

void validate(int n_strands, const std::vector<int>& letters) {
    if (n_strands < 1)
        throw std::invalid_argument("braid needs at least one strand");
    for (int g : letters) {
        if (g == 0)
            throw std::invalid_argument("braid letter 0 is not a generator");
        int idx = g < 0 ? -g : g;
        if (idx > n_strands - 1)
            throw std::invalid_argument("braid letter " + std::to_string(g) + " out of range for " +
                                        std::to_string(n_strands) + " strands (need |g| <= " +
                                        std::to_string(n_strands - 1) + ")");
    }
}

} // namespace

BraidWord::BraidWord(int n, std::vector<int> ls) : n_strands(n), letters(std::move(ls)) {
    validate(n_strands, letters);
}

BraidWord parse_braid(const std::string& text, int n_strands) {
    std::string normalized = text;
    for (char& c : normalized)
        if (c == ',') c = ' ';

    std::vector<int> letters;
    std::istringstream in(normalized);
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("braid token '" + tok + "' is not an integer");
        }
        if (used != tok.size())
            throw std::invalid_argument("braid token '" + tok + "' is not an integer");
        letters.push_back(static_cast<int>(v));
    }
    return BraidWord(n_strands, std::move(letters));
}

int exponent_sum(const BraidWord& b) {
    int s = 0;
    for (int g : b.letters) s += (g > 0) ? 1 : -1;
    return s;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
    if (a.n_strands != b.n_strands)
        throw std::invalid_argument("cannot concatenate braids on different strand counts");
    std::vector<int> ls = a.letters;
    ls.insert(ls.end(), b.letters.begin(), b.letters.end());
    return BraidWord(a.n_strands, std::move(ls));
}

BraidWord inverse(const BraidWord& b) {
    std::vector<int> ls(b.letters.rbegin(), b.letters.rend());
    for (int& g : ls) g = -g;
    return BraidWord(b.n_strands, std::move(ls));
}

BraidWord embed(const BraidWord& b, int n_strands) {
    if (n_strands < b.n_strands)
        throw std::invalid_argument("embed target must have at least as many strands");
    return BraidWord(n_strands, b.letters);
}

ClosureInfo closure_permutation(const BraidWord& b) {
    std::vector<int> pos(b.n_strands);
    std::iota(pos.begin(), pos.end(), 0);
    // pos[p] = index of the strand currently at position p, tracked top to bottom.
    for (int g : b.letters) {
        int i = (g < 0 ? -g : g) - 1;
        std::swap(pos[i], pos[i + 1]);
    }
    // permutation[strand entering at top i] = its bottom position
    std::vector<int> perm(b.n_strands);
    for (int p = 0; p < b.n_strands; ++p) perm[pos[p]] = p;

    int components = 0;
    std::vector<bool> seen(b.n_strands, false);
    for (int i = 0; i < b.n_strands; ++i) {
        if (seen[i]) continue;
        ++components;
        for (int j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return ClosureInfo{std::move(perm), components};
}

std::string to_string(const BraidWord& b) {
    std::string out;
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(b.letters[i]);
    }
    return out;
}

} // namespace jones
