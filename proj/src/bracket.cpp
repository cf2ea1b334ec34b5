#include "jones/bracket.hpp"

#include "jones/errors.hpp"

#include <cstdlib>
#include <map>
#include <stdexcept>
#include <vector>

namespace jones {

SmoothedLetter smooth_letter(int letter, Smoothing choice, int n_strands) {
    if (letter == 0) throw std::invalid_argument("letter 0 is not a generator");
    const int i = std::abs(letter);
    if (i > n_strands - 1) throw std::invalid_argument("letter out of range for strand count");
    const bool positive = letter > 0;
    if (choice == Smoothing::A)
        return SmoothedLetter{TLDiagram(n_strands), positive ? +1 : -1};
    return SmoothedLetter{TLDiagram::generator(n_strands, i), positive ? -1 : +1};
}

namespace {

// Union-find over the grid of strand endpoints. Levels 0..c, n nodes per
// level; letter t puts its arcs between levels t-1 and t; the closure joins
// level 0 to level c. Every node ends with degree 2, so the smoothed closed
// diagram is a disjoint union of circles and the loop count is the number of
// connected components.
class LoopCounter {
  public:
    LoopCounter(int n, int letters) : n_(n), parent_(static_cast<std::size_t>(n) * (letters + 1)) {}

    void reset() {
        for (std::size_t i = 0; i < parent_.size(); ++i) parent_[i] = static_cast<int>(i);
        components_ = static_cast<int>(parent_.size());
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        parent_[a] = b;
        --components_;
    }

    int node(int level, int strand) const { return level * n_ + strand; }
    int components() const { return components_; }

  private:
    int find(int a) {
        while (parent_[a] != a) {
            parent_[a] = parent_[parent_[a]];
            a = parent_[a];
        }
        return a;
    }

    int n_;
    std::vector<int> parent_;
    int components_ = 0;
};

} // namespace

LaurentInt raw_bracket(const BraidWord& b, std::size_t cap) {
    const std::size_t c = b.size();
    if (c > cap)
        throw std::invalid_argument("state sum over " + std::to_string(c) + " crossings exceeds the cap of " +
                                    std::to_string(cap) + " (2^c states); use the TL fold path instead");
    const int n = b.n_strands;
    const int levels = static_cast<int>(c) + 1;

    // Bucket states by (A-exponent, loop count); expanding d^loops once per
    // bucket keeps the exact arithmetic off the hot path.
    std::map<std::pair<int, int>, BigInt> buckets;
    LoopCounter uf(n, static_cast<int>(c));

    const std::uint64_t n_states = std::uint64_t(1) << c;
    for (std::uint64_t state = 0; state < n_states; ++state) {
        uf.reset();
        int weight_exp = 0;
        for (std::size_t t = 0; t < c; ++t) {
            const int g = b.letters[t];
            const int i = std::abs(g) - 1; // 0-based strand pair (i, i+1)
            const bool cupcap = (state >> t) & 1u;
            weight_exp += (g > 0) == !cupcap ? +1 : -1;
            const int top = static_cast<int>(t);
            const int bot = top + 1;
            if (cupcap) {
                uf.unite(uf.node(top, i), uf.node(top, i + 1));
                uf.unite(uf.node(bot, i), uf.node(bot, i + 1));
                for (int j = 0; j < n; ++j)
                    if (j != i && j != i + 1) uf.unite(uf.node(top, j), uf.node(bot, j));
            } else {
                for (int j = 0; j < n; ++j) uf.unite(uf.node(top, j), uf.node(bot, j));
            }
        }
        for (int j = 0; j < n; ++j) uf.unite(uf.node(0, j), uf.node(levels - 1, j));
        buckets[{weight_exp, uf.components()}] += 1;
    }

    // Precompute d^k up to the largest loop count seen.
    int max_loops = 0;
    for (const auto& [key, cnt] : buckets) max_loops = std::max(max_loops, key.second);
    std::vector<LaurentInt> d_pow(static_cast<std::size_t>(max_loops) + 1);
    d_pow[0] = LaurentInt::from_int(1);
    const LaurentInt d = LaurentInt::loop_value();
    for (int k = 1; k <= max_loops; ++k) d_pow[k] = d_pow[k - 1] * d;

    LaurentInt sum;
    for (const auto& [key, cnt] : buckets) sum += d_pow[key.second].scaled(cnt, key.first);
    return sum;
}

LaurentInt tl_fold_bracket(const BraidWord& b) {
    const int n = b.n_strands;
    const LaurentInt d = LaurentInt::loop_value();

    // Linear combination of loop-free diagrams; loops made while attaching a
    // generator are absorbed into the coefficients as factors of d.
    std::map<std::vector<std::uint8_t>, LaurentInt> combo;
    std::map<std::vector<std::uint8_t>, TLDiagram> shapes;
    TLDiagram ident(n);
    combo.emplace(ident.key(), LaurentInt::from_int(1));
    shapes.emplace(ident.key(), ident);

    for (int g : b.letters) {
        const int i = std::abs(g);
        const int id_exp = g > 0 ? +1 : -1;
        std::map<std::vector<std::uint8_t>, LaurentInt> next;
        for (const auto& [key, coeff] : combo) {
            // identity smoothing: the diagram is unchanged
            next[key] += coeff.scaled(1, id_exp);
            // cup-cap smoothing
            TLDiagram attached = shapes.at(key);
            const int made = attached.attach_generator(i);
            LaurentInt contrib = coeff.scaled(1, -id_exp);
            for (int k = 0; k < made; ++k) contrib = contrib * d;
            attached = attached.without_loops();
            auto akey = attached.key();
            next[akey] += contrib;
            shapes.emplace(akey, attached);
        }
        // R-II style cancellations leave exact zeros behind; drop them
        for (auto it = next.begin(); it != next.end();)
            it = it->second.is_zero() ? next.erase(it) : std::next(it);
        combo = std::move(next);
    }

    LaurentInt sum;
    for (const auto& [key, coeff] : combo) {
        const int circles = shapes.at(key).closure_loops();
        LaurentInt d_pow = LaurentInt::from_int(1);
        for (int k = 0; k < circles; ++k) d_pow = d_pow * d;
        sum += coeff * d_pow;
    }
    return sum;
}

LaurentInt bracket_value(const BraidWord& b, BracketAlgo algo, std::size_t cap) {
    switch (algo) {
        case BracketAlgo::state_sum: return raw_bracket(b, cap);
        case BracketAlgo::tl_fold: return tl_fold_bracket(b);
        case BracketAlgo::auto_select:
        default: return b.size() <= 12 && b.size() <= cap ? raw_bracket(b, cap) : tl_fold_bracket(b);
    }
}

LaurentInt reduced_bracket(const BraidWord& b, BracketAlgo algo) {
    return div_exact(bracket_value(b, algo), LaurentInt::loop_value());
}

LaurentInt writhe_normalizer(int k) {
    const BigInt sign = (k % 2 == 0) ? 1 : -1;
    return LaurentInt::monomial(sign, 3 * k);
}

LaurentInt normalized_f(const BraidWord& b, BracketAlgo algo) {
    return reduced_bracket(b, algo) * writhe_normalizer(-exponent_sum(b));
}

QuarterLaurent jones_polynomial(const BraidWord& b, BracketAlgo algo) {
    return QuarterLaurent::from_f_polynomial(normalized_f(b, algo));
}

} // namespace jones
