#include "jones/ajl.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jones {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kLambdaClamp = 1e-14;
constexpr double kRootOfUnityTol = 1e-10;
} // namespace

AJLParams AJLParams::make(double theta, int r) {
    if (r < 3) throw std::invalid_argument("AJL parameter r must be >= 3");
    if (!(theta > 0.0) || theta > kPi / r + 1e-15)
        throw std::invalid_argument("theta must lie in (0, pi/r]; got theta = " + std::to_string(theta) +
                                    " with pi/r = " + std::to_string(kPi / r));
    AJLParams p;
    p.theta = theta;
    p.r = r;
    p.A = Complex(0.0, 1.0) * std::polar(1.0, theta / 2.0);
    p.d = 2.0 * std::cos(theta);
    p.lambdas.resize(static_cast<std::size_t>(r) + 1);
    for (int k = 0; k <= r; ++k) {
        double v = std::sin(k * theta);
        if (std::abs(v) <= kLambdaClamp) v = 0.0;
        p.lambdas[static_cast<std::size_t>(k)] = v;
    }
    for (int k = 1; k <= r - 1; ++k)
        if (!(p.lambda(k) > 0.0))
            throw std::invalid_argument("lambda_" + std::to_string(k) + " = sin(k theta) must be positive");
    return p;
}

bool AJLParams::root_of_unity() const { return std::abs(lambda(r)) <= kRootOfUnityTol; }

ParamReport validate_params(double theta, int r, int n) {
    ParamReport rep;
    if (r < 3) {
        rep.error = "r must be >= 3";
        return rep;
    }
    if (!(theta > 0.0) || theta > kPi / r + 1e-15) {
        rep.error = "theta must lie in (0, pi/r]";
        return rep;
    }
    for (int k = 1; k <= r - 1; ++k) {
        if (!(std::sin(k * theta) > kLambdaClamp)) {
            rep.error = "lambda_" + std::to_string(k) + " is not positive";
            return rep;
        }
    }
    rep.valid = true;
    rep.root_of_unity = std::abs(std::sin(r * theta)) <= kRootOfUnityTol;
    rep.truncated = r < n + 2;
    if (rep.truncated && !rep.root_of_unity)
        rep.warnings.push_back("truncated basis (r < n+2) with generic theta: the trace-bracket identity "
                               "is not guaranteed");
    if (rep.truncated && rep.root_of_unity)
        rep.warnings.push_back("truncated basis in root-of-unity mode (original algorithm regime)");
    return rep;
}

Matrix build_E(int i, const PathBasis& basis, const AJLParams& params) {
    const int n = basis.n_bits();
    if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
    const std::size_t dim = basis.dim();
    Matrix E(dim, dim);
    for (std::size_t col = 0; col < dim; ++col) {
        const std::string& p = basis.walk(col);
        const char bi = p[static_cast<std::size_t>(i - 1)];
        const char bj = p[static_cast<std::size_t>(i)];
        if (bi == bj) continue; // E_i annihilates local 00 and 11
        const int a = basis.prefix_node(col, i - 1); // z(i)
        const double lz = params.lambda(a);
        if (!(lz > 0.0)) throw std::invalid_argument("lambda_z(i) must be positive in build_E");
        const double lm = params.lambda(a - 1);
        const double lp = params.lambda(a + 1);
        const double diag = (bi == '0') ? lm / lz : lp / lz;
        const double cross = std::sqrt(lm * lp) / lz;
        E(col, col) = diag;
        std::string q = p;
        std::swap(q[static_cast<std::size_t>(i - 1)], q[static_cast<std::size_t>(i)]);
        const std::size_t row = basis.index_of(q);
        // A missing partner walk means its amplitude lands outside the basis;
        // for r >= n+2 (and at roots of unity) the coupling is exactly zero.
        if (row != PathBasis::npos) E(row, col) = cross;
    }
    return E;
}

std::vector<Matrix> build_all_E(const PathBasis& basis, const AJLParams& params) {
    std::vector<Matrix> es;
    es.reserve(static_cast<std::size_t>(basis.n_bits() - 1));
    for (int i = 1; i <= basis.n_bits() - 1; ++i) es.push_back(build_E(i, basis, params));
    return es;
}

Matrix rho_ajl(const BraidWord& b, const PathBasis& basis, const AJLParams& params) {
    if (b.n_strands != basis.n_bits())
        throw std::invalid_argument("braid strand count must match the basis bit count");
    const Complex A = params.A;
    const Complex Ainv = 1.0 / A;
    std::vector<Matrix> es = build_all_E(basis, params);
    Matrix m = Matrix::identity(basis.dim());
    for (int g : b.letters) {
        const Matrix& e = es[static_cast<std::size_t>((g < 0 ? -g : g) - 1)];
        m = m * (g > 0 ? scaled_identity_plus(A, Ainv, e) : scaled_identity_plus(Ainv, A, e));
    }
    return m;
}

} // namespace jones
