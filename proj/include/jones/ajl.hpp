#pragma once

#include "jones/braid.hpp"
#include "jones/matrix.hpp"
#include "jones/path_basis.hpp"

#include <string>
#include <vector>

namespace jones {

// Parameters of the continuous-angle path-model representation:
// A = i exp(i theta/2), d = -A^2 - A^-2 = 2 cos(theta), lambda_k = sin(k theta)
// for k = 0..r, with theta in (0, pi/r].
struct AJLParams {
    double theta = 0.0;
    int r = 0;
    Complex A;
    double d = 0.0;
    std::vector<double> lambdas; // index k = 0..r; tiny values clamped to 0

    static AJLParams make(double theta, int r);

    double lambda(int k) const { return lambdas[static_cast<std::size_t>(k)]; }
    // sin(r theta) = 0: the root-of-unity regime of the original algorithm.
    bool root_of_unity() const;
};

// Structured admissibility report for a (theta, r, n) configuration.
struct ParamReport {
    bool valid = false;
    bool truncated = false;     // r < n + 2: some n-bit walk is right-truncated
    bool root_of_unity = false; // |sin(r theta)| <= 1e-10
    std::vector<std::string> warnings;
    std::string error; // empty when valid

    const char* mode() const { return root_of_unity ? "root-of-unity" : "generic"; }
};

ParamReport validate_params(double theta, int r, int n);

// The generator E_i = |v(z(i))><v(z(i))| acting on bit positions (i, i+1),
// over the given walk basis. Local bits 00 and 11 are annihilated; on a
// {01, 10} pair with a = z(i) the rank-1 block uses lambda_{a-1}, lambda_a,
// lambda_{a+1}. Couplings to walks outside the basis are dropped; with
// r >= n+2 or at a root of unity those couplings are exactly zero.
Matrix build_E(int i, const PathBasis& basis, const AJLParams& params);

// E_1 .. E_{n-1} in one pass.
std::vector<Matrix> build_all_E(const PathBasis& basis, const AJLParams& params);

// Ordered product of A I + A^-1 E_i (positive letters) and A^-1 I + A E_i
// (negative letters); unitary whenever the parameters validate.
Matrix rho_ajl(const BraidWord& b, const PathBasis& basis, const AJLParams& params);

} // namespace jones
