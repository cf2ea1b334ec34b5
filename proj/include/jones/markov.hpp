#pragma once

#include "jones/ajl.hpp"
#include "jones/braid.hpp"
#include "jones/matrix.hpp"
#include "jones/path_basis.hpp"

#include <complex>
#include <vector>

namespace jones {

// Basis indices grouped by walk endpoint. Braid letters never change an
// endpoint, so every rho_ajl(b) is block-diagonal across sectors.
struct SectorDecomposition {
    std::vector<int> nodes;                          // distinct endpoints, ascending
    std::vector<std::vector<std::size_t>> members;   // per node, basis indices

    static SectorDecomposition from_basis(const PathBasis& basis);
};

// TR(M) = sum_k lambda_k tr(M_k) over endpoint sectors.
Complex weighted_trace(const Matrix& M, const PathBasis& basis, const AJLParams& params);

// Largest |entry| of M coupling two different sectors (block-diagonality
// defect; exactly 0 for genuine braid images).
double off_sector_mass(const Matrix& M, const PathBasis& basis);

// Raw-convention bracket of the braid closure: TR(rho(b)) / lambda_1. The
// 1/lambda_1 normalization is fixed by the n = 1 identity braid (TR =
// lambda_2 = d lambda_1, one unknot = d) and propagates through the Markov
// property. Refuses truncated generic parameters unless forced.
Complex bracket_ajl(const BraidWord& b, const PathBasis& basis, const AJLParams& params,
                    bool force_truncated = false);

// Product of E_i over a word of generator indices (empty = identity).
Matrix tl_word_matrix(const std::vector<int>& word, const PathBasis& basis, const AJLParams& params);

// | d TR_{n+1}(Phi(word) E_n) - TR_{n+1}(Phi(word)) | where Phi includes the
// TL_n word into TL_{n+1}; zero exactly when the Markov property holds.
double markov_residual(const std::vector<int>& word, int n, const AJLParams& params);

// d^c, the value of c disjoint loops.
double loop_count_value(int c, const AJLParams& params);

} // namespace jones
