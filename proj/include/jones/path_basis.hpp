#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

namespace jones {

// Basis of the path-model space H_{n,r}: n-bit strings read as walks on the
// line graph G_r (nodes 1..r-1), starting at node 1, bit 1 stepping right and
// bit 0 stepping left, never leaving the graph. Walks are kept in ascending
// lexicographic order ('0' < '1').
class PathBasis {
  public:
    static PathBasis enumerate(int n, int r);

    int n_bits() const { return n_; }
    int r() const { return r_; }
    std::size_t dim() const { return walks_.size(); }

    const std::string& walk(std::size_t idx) const { return walks_[idx]; }
    int endpoint(std::size_t idx) const { return endpoints_[idx]; }
    const std::vector<std::string>& walks() const { return walks_; }
    const std::vector<int>& endpoints() const { return endpoints_; }

    // Node after the first `steps` bits of walk idx (steps = 0 gives node 1).
    int prefix_node(std::size_t idx, int steps) const { return prefix_nodes_[idx][steps]; }

    // Index of a walk string, or npos when it is not an admissible walk.
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t index_of(const std::string& walk) const;

  private:
    int n_ = 0;
    int r_ = 0;
    std::vector<std::string> walks_;
    std::vector<int> endpoints_;
    std::vector<std::vector<int>> prefix_nodes_;
    std::unordered_map<std::string, std::size_t> index_;
};

// z(i): endpoint of the walk described by the first i-1 bits of p, so
// z(1) = 1 always. Throws if the prefix steps left of node 1.
int endpoint_prefix(const std::string& p, int i);

// Whether an n-bit string is a walk on G_r.
bool is_walk(const std::string& p, int r);

} // namespace jones
