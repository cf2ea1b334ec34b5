#include "jones/markov.hpp"

#include "jones/errors.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace jones {

SectorDecomposition SectorDecomposition::from_basis(const PathBasis& basis) {
    std::map<int, std::vector<std::size_t>> by_node;
    for (std::size_t i = 0; i < basis.dim(); ++i) by_node[basis.endpoint(i)].push_back(i);
    SectorDecomposition s;
    for (auto& [node, members] : by_node) {
        s.nodes.push_back(node);
        s.members.push_back(std::move(members));
    }
    return s;
}

Complex weighted_trace(const Matrix& M, const PathBasis& basis, const AJLParams& params) {
    if (M.rows() != basis.dim() || M.cols() != basis.dim())
        throw std::invalid_argument("weighted_trace: matrix does not match the basis dimension");
    Complex tr = 0.0;
    for (std::size_t i = 0; i < basis.dim(); ++i) tr += params.lambda(basis.endpoint(i)) * M(i, i);
    return tr;
}

double off_sector_mass(const Matrix& M, const PathBasis& basis) {
    double worst = 0.0;
    for (std::size_t i = 0; i < basis.dim(); ++i)
        for (std::size_t j = 0; j < basis.dim(); ++j)
            if (basis.endpoint(i) != basis.endpoint(j)) worst = std::max(worst, std::abs(M(i, j)));
    return worst;
}

Complex bracket_ajl(const BraidWord& b, const PathBasis& basis, const AJLParams& params,
                    bool force_truncated) {
    const ParamReport rep = validate_params(params.theta, params.r, basis.n_bits());
    if (!rep.valid) throw std::invalid_argument("invalid AJL parameters: " + rep.error);
    if (rep.truncated && !rep.root_of_unity && !force_truncated)
        throw truncation_error("truncated basis (r < n+2) at generic theta: the trace does not reproduce "
                               "the bracket; use r >= n+2, a root of unity, or force truncation");
    return weighted_trace(rho_ajl(b, basis, params), basis, params) / params.lambda(1);
}

Matrix tl_word_matrix(const std::vector<int>& word, const PathBasis& basis, const AJLParams& params) {
    Matrix m = Matrix::identity(basis.dim());
    for (int i : word) m = m * build_E(i, basis, params);
    return m;
}

double markov_residual(const std::vector<int>& word, int n, const AJLParams& params) {
    for (int i : word)
        if (i < 1 || i > n - 1) throw std::invalid_argument("TL word letter out of range for TL_n");
    const PathBasis wide = PathBasis::enumerate(n + 1, params.r);
    const Matrix included = tl_word_matrix(word, wide, params);
    const Matrix en = build_E(n, wide, params);
    const Complex lhs = params.d * weighted_trace(included * en, wide, params);
    const Complex rhs = weighted_trace(included, wide, params);
    return std::abs(lhs - rhs);
}

double loop_count_value(int c, const AJLParams& params) {
    if (c < 0) throw std::invalid_argument("loop count must be nonnegative");
    return std::pow(params.d, c);
}

} // namespace jones
