#pragma once

#include "jones/braid.hpp"
#include "jones/laurent.hpp"
#include "jones/tl_diagram.hpp"

#include <cstddef>
#include <cstdint>

namespace jones {

// Which way a crossing is resolved in the bracket expansion.
enum class Smoothing : std::uint8_t { A, B };

// One resolved crossing: the local diagram and the weight A^{weight_exp}.
// Convention: a positive generator takes weight A on the identity smoothing
// and A^-1 on the cup-cap, matching rho(sigma_i) = A I + A^-1 U_i; negative
// generators swap the two (mirror image swaps A and A^-1).
struct SmoothedLetter {
    TLDiagram diagram;
    int weight_exp;
};

SmoothedLetter smooth_letter(int letter, Smoothing choice, int n_strands);

// Default ceiling on the 2^c full state sum.
inline constexpr std::size_t kStateSumCap = 24;

// Kauffman bracket of the braid closure by the full 2^c state sum, raw
// convention: a state of c closed loops contributes (weights) * d^c, so the
// n-strand identity braid evaluates to d^n. Words longer than `cap` are
// rejected; use tl_fold_bracket for those.
LaurentInt raw_bracket(const BraidWord& b, std::size_t cap = kStateSumCap);

// Same value as raw_bracket, computed by folding the word left to right as a
// linear combination of TL diagrams (dimension bounded by the Catalan
// number), polynomial in the word length. Independent algorithm, kept as the
// oracle's cross-check and fast path.
LaurentInt tl_fold_bracket(const BraidWord& b);

enum class BracketAlgo {
    state_sum,  // raw_bracket, subject to the cap
    tl_fold,    // diagram folding
    auto_select // state sum for short words, fold beyond
};

// Raw-convention bracket through the selected algorithm.
LaurentInt bracket_value(const BraidWord& b, BracketAlgo algo = BracketAlgo::auto_select,
                         std::size_t cap = kStateSumCap);

// raw / d: the reduced convention (unknot = 1). Exact synthetic division with
// a zero-remainder assertion.
LaurentInt reduced_bracket(const BraidWord& b, BracketAlgo algo = BracketAlgo::auto_select);

// f = (-A^3)^{-I(b)} * reduced bracket; invariant under all Reidemeister
// moves of the closure.
LaurentInt normalized_f(const BraidWord& b, BracketAlgo algo = BracketAlgo::auto_select);

// V(t) = f(t^{-1/4}), with exact quarter-integer powers of t.
QuarterLaurent jones_polynomial(const BraidWord& b, BracketAlgo algo = BracketAlgo::auto_select);

// (-A^3)^k as an exact Laurent monomial (k may be negative).
LaurentInt writhe_normalizer(int k);

} // namespace jones
