#include "jones/kl3.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jones {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryTol = 1e-12;
} // namespace

Complex ipow(Complex z, int k) {
    if (k < 0) return 1.0 / ipow(z, -k);
    Complex acc = 1.0;
    Complex base = z;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) acc *= base;
        base *= base;
        e >>= 1u;
    }
    return acc;
}

KLParams KLParams::from_theta(double theta, bool allow_nonunitary) {
    KLParams p;
    p.theta = theta;
    p.A = std::polar(1.0, theta);
    p.delta = -2.0 * std::cos(2.0 * theta);
    if (std::abs(p.delta) <= kBoundaryTol)
        throw std::invalid_argument("singular parameter: delta = 0 at theta = " + std::to_string(theta) +
                                    " (U2 needs delta^-1)");
    p.unitary = p.delta * p.delta >= 1.0 - kBoundaryTol;
    if (!p.unitary && !allow_nonunitary)
        throw std::invalid_argument("theta = " + std::to_string(theta) +
                                    " gives delta^2 < 1; not unitary (pass allow_nonunitary to experiment)");
    p.tau = 1.0 / (p.delta * p.delta);
    p.b_entry = std::sqrt(Complex(1.0 - p.tau, 0.0));
    return p;
}

std::pair<Matrix, Matrix> u_matrices(const KLParams& params) {
    const double delta = params.delta;
    Matrix u1(2, 2), u2(2, 2);
    u1(0, 0) = delta;
    u2(0, 0) = 1.0 / delta;
    u2(0, 1) = params.b_entry;
    u2(1, 0) = params.b_entry;
    u2(1, 1) = delta - 1.0 / delta;
    return {u1, u2};
}

Matrix rho3(const BraidWord& b, const KLParams& params) {
    if (b.n_strands > 3)
        throw std::invalid_argument("rho3 covers at most 3 strands");
    auto [u1, u2] = u_matrices(params);
    const Complex A = params.A;
    const Complex Ainv = 1.0 / A;
    Matrix m = Matrix::identity(2);
    for (int g : b.letters) {
        const int i = g < 0 ? -g : g;
        if (i > 2) throw std::invalid_argument("rho3 letter out of range");
        const Matrix& u = (i == 1) ? u1 : u2;
        // positive: A I + A^-1 U; negative: the exact inverse A^-1 I + A U
        m = m * (g > 0 ? scaled_identity_plus(A, Ainv, u) : scaled_identity_plus(Ainv, A, u));
    }
    return m;
}

std::vector<std::pair<double, double>> unitary_theta_ranges() {
    return {{0.0, kPi / 6.0},
            {kPi / 3.0, 2.0 * kPi / 3.0},
            {5.0 * kPi / 6.0, 7.0 * kPi / 6.0},
            {4.0 * kPi / 3.0, 5.0 * kPi / 3.0},
            {11.0 * kPi / 6.0, 2.0 * kPi}};
}

bool is_unitary_theta(double theta) {
    const double delta = -2.0 * std::cos(2.0 * theta);
    return delta * delta >= 1.0 - kBoundaryTol;
}

Complex bracket_kl3(const BraidWord& b, const KLParams& params) {
    const Complex tr = rho3(b, params).trace();
    const double d2 = params.delta * params.delta;
    return tr + ipow(params.A, exponent_sum(b)) * (d2 - 2.0);
}

Complex jones_kl3(const BraidWord& b, const KLParams& params) {
    const int I = exponent_sum(b);
    return ipow(-ipow(params.A, 3), -I) * bracket_kl3(b, params);
}

} // namespace jones
