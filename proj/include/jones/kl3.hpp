#pragma once

#include "jones/braid.hpp"
#include "jones/matrix.hpp"

#include <complex>
#include <utility>
#include <vector>

namespace jones {

// Parameters of the three-strand representation rho(sigma_i) = A I + A^-1 U_i
// at A = exp(i theta), delta = -2 cos(2 theta).
struct KLParams {
    double theta = 0.0;
    Complex A;
    double delta = 0.0;
    double tau = 0.0;     // delta^-2, diagnostic
    Complex b_entry;      // sqrt(1 - delta^-2); imaginary outside unitary range
    bool unitary = false; // delta^2 >= 1

    // Throws on delta ~ 0 (U2 has a delta^-1 entry). Outside the unitary
    // range (delta^2 < 1) throws unless allow_nonunitary, in which case
    // b_entry turns imaginary and U2 is complex symmetric.
    static KLParams from_theta(double theta, bool allow_nonunitary = false);
};

// U1 = [[delta, 0], [0, 0]],
// U2 = [[delta^-1, b], [b, delta - delta^-1]] with b = sqrt(1 - delta^-2).
std::pair<Matrix, Matrix> u_matrices(const KLParams& params);

// Ordered product of per-letter matrices; negative letters use the exact
// inverse A^-1 I + A U_i. Words on 2 strands embed using only sigma_1.
Matrix rho3(const BraidWord& b, const KLParams& params);

// The closed theta intervals in [0, 2pi] where the representation is unitary.
std::vector<std::pair<double, double>> unitary_theta_ranges();
bool is_unitary_theta(double theta);

// Reduced-convention bracket of the 3-braid closure:
//   <betabar> = tr(rho(b)) + A^{I(b)} (delta^2 - 2).
Complex bracket_kl3(const BraidWord& b, const KLParams& params);

// f(bbar) = (-A^3)^{-I(b)} <bbar>.
Complex jones_kl3(const BraidWord& b, const KLParams& params);

// z^k for integer k (|z| need not be 1).
Complex ipow(Complex z, int k);

} // namespace jones
