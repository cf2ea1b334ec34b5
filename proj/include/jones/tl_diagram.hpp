#pragma once

#include <cstdint>
#include <vector>

namespace jones {

// A planar perfect matching of 2n boundary points (tops 0..n-1 entering the
// braid, bottoms n..2n-1 leaving it) together with the number of closed loops
// absorbed while composing. These are the diagrams of the Temperley-Lieb
// algebra on n strands.
class TLDiagram {
  public:
    explicit TLDiagram(int n); // identity: top_i -- bottom_i, no loops

    // The cup-cap generator E_i (1-based, 1 <= i <= n-1): tops i-1,i paired,
    // bottoms i-1,i paired, everything else vertical.
    static TLDiagram generator(int n, int i);

    int strands() const { return n_; }
    int loops() const { return loops_; }
    int partner(int point) const { return partner_[point]; }

    // Multiply on the bottom by E_i. Returns the number of loops created
    // (0 or 1), which is also added to the accumulated loop count.
    int attach_generator(int i);

    // Loop count of the braid closure (top_i joined to bottom_i), including
    // loops already absorbed.
    int closure_loops() const;

    // The matching alone, as a deterministic map key.
    std::vector<std::uint8_t> key() const;

    // Copy with the absorbed loop count cleared; used when coefficients take
    // over the bookkeeping of loops.
    TLDiagram without_loops() const;

    bool operator==(const TLDiagram&) const = default;

  private:
    int n_;
    int loops_;
    std::vector<int> partner_;
};

} // namespace jones
