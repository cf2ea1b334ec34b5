#include "jones/tl_diagram.hpp"

#include <stdexcept>

namespace jones {

TLDiagram::TLDiagram(int n) : n_(n), loops_(0), partner_(2 * static_cast<std::size_t>(n)) {
    if (n < 1) throw std::invalid_argument("TLDiagram needs at least one strand");
    for (int j = 0; j < n; ++j) {
        partner_[j] = n + j;
        partner_[n + j] = j;
    }
}

TLDiagram TLDiagram::generator(int n, int i) {
    TLDiagram d(n);
    if (i < 1 || i > n - 1) throw std::invalid_argument("TL generator index out of range");
    int a = i - 1, b = i;
    d.partner_[a] = b;
    d.partner_[b] = a;
    d.partner_[n + a] = n + b;
    d.partner_[n + b] = n + a;
    return d;
}

int TLDiagram::attach_generator(int i) {
    if (i < 1 || i > n_ - 1) throw std::invalid_argument("TL generator index out of range");
    const int bi = n_ + i - 1;
    const int bj = n_ + i;
    int made = 0;
    const int x = partner_[bi];
    const int y = partner_[bj];
    if (x == bj) {
        // bottoms i-1,i were already an arc: the cap of E_i closes it
        made = 1;
    } else {
        partner_[x] = y;
        partner_[y] = x;
    }
    partner_[bi] = bj;
    partner_[bj] = bi;
    loops_ += made;
    return made;
}

int TLDiagram::closure_loops() const {
    std::vector<bool> seen(partner_.size(), false);
    int circles = 0;
    for (std::size_t s = 0; s < partner_.size(); ++s) {
        if (seen[s]) continue;
        ++circles;
        std::size_t p = s;
        while (!seen[p]) {
            seen[p] = true;
            std::size_t q = static_cast<std::size_t>(partner_[p]); // diagram arc
            seen[q] = true;
            // closure arc: top_j <-> bottom_j
            p = q < static_cast<std::size_t>(n_) ? q + n_ : q - n_;
        }
    }
    return circles + loops_;
}

TLDiagram TLDiagram::without_loops() const {
    TLDiagram d = *this;
    d.loops_ = 0;
    return d;
}

std::vector<std::uint8_t> TLDiagram::key() const {
    std::vector<std::uint8_t> k(partner_.size());
    for (std::size_t i = 0; i < partner_.size(); ++i) k[i] = static_cast<std::uint8_t>(partner_[i]);
    return k;
}

} // namespace jones
