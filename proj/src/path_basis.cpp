#include "jones/path_basis.hpp"

#include <stdexcept>

namespace jones {

PathBasis PathBasis::enumerate(int n, int r) {
    if (n < 1) throw std::invalid_argument("path basis needs n >= 1 bits");
    if (r < 3) throw std::invalid_argument("line graph G_r needs r >= 3");

    PathBasis basis;
    basis.n_ = n;
    basis.r_ = r;

    // Depth-first with the '0' branch first yields ascending lex order.
    std::string walk(static_cast<std::size_t>(n), '0');
    std::vector<int> nodes(static_cast<std::size_t>(n) + 1, 1);
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            basis.walks_.push_back(walk);
            basis.endpoints_.push_back(nodes[depth]);
            basis.prefix_nodes_.push_back(nodes);
            return;
        }
        const int at = nodes[depth];
        if (at - 1 >= 1) {
            walk[depth] = '0';
            nodes[depth + 1] = at - 1;
            self(self, depth + 1);
        }
        if (at + 1 <= r - 1) {
            walk[depth] = '1';
            nodes[depth + 1] = at + 1;
            self(self, depth + 1);
        }
    };
    dfs(dfs, 0);

    if (basis.walks_.empty()) throw std::invalid_argument("empty path basis for n = " + std::to_string(n) +
                                                          ", r = " + std::to_string(r));
    for (std::size_t i = 0; i < basis.walks_.size(); ++i) basis.index_.emplace(basis.walks_[i], i);
    return basis;
}

std::size_t PathBasis::index_of(const std::string& walk) const {
    auto it = index_.find(walk);
    return it == index_.end() ? npos : it->second;
}

int endpoint_prefix(const std::string& p, int i) {
    if (i < 1 || static_cast<std::size_t>(i) > p.size() + 1)
        throw std::invalid_argument("prefix index out of range");
    int node = 1;
    for (int k = 0; k < i - 1; ++k) {
        node += (p[static_cast<std::size_t>(k)] == '1') ? 1 : -1;
        if (node < 1) throw std::invalid_argument("walk leaves the graph on the left");
    }
    return node;
}

bool is_walk(const std::string& p, int r) {
    int node = 1;
    for (char c : p) {
        if (c != '0' && c != '1') return false;
        node += (c == '1') ? 1 : -1;
        if (node < 1 || node > r - 1) return false;
    }
    return true;
}

} // namespace jones
