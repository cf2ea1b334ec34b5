#include "jones/hadamard.hpp"

#include "jones/bracket.hpp"

#include <doctest.h>

#include <cmath>

using namespace jones;

TEST_CASE("hadamard_shot measurement statistics") {
    ShotRng rng(99, 0);
    const Matrix eye = Matrix::identity(3);
    for (int k = 0; k < 20; ++k) CHECK(hadamard_shot(eye, 1, 1.0, rng) == 0);
    const Matrix neg = Matrix::identity(3).scaled(-1.0);
    for (int k = 0; k < 20; ++k) CHECK(hadamard_shot(neg, 0, 1.0, rng) == 1);

    // <p|U|p> = 0: a fair coin
    Matrix swap(2, 2);
    swap(0, 1) = 1.0;
    swap(1, 0) = 1.0;
    int ones = 0;
    for (int k = 0; k < 4000; ++k) ones += hadamard_shot(swap, 0, 1.0, rng);
    CHECK(ones > 1800);
    CHECK(ones < 2200);

    // phase -i probes the imaginary part: U = iI gives Re(-i * i) = 1
    const Matrix rot = Matrix::identity(2).scaled(Complex(0.0, 1.0));
    for (int k = 0; k < 20; ++k) CHECK(hadamard_shot(rot, 0, Complex(0.0, -1.0), rng) == 0);

    CHECK_THROWS_AS(hadamard_shot(Matrix::identity(2).scaled(0.5), 0, 1.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(hadamard_shot(eye, 5, 1.0, rng), std::invalid_argument);
}

TEST_CASE("identity braid estimate carries only sector-weight noise") {
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.5, 4);
    const BraidWord id2(2, {});
    const Complex exact = weighted_trace(rho_ajl(id2, basis, params), basis, params);
    const TraceEstimate est = estimate_weighted_trace(id2, basis, params, {100000, 21, Parts::both});
    CHECK(std::abs(est.estimate.real() - exact.real()) <= 4.0 * est.stderr_re + 1e-12);
    CHECK(std::abs(est.estimate.imag() - exact.imag()) <= 4.0 * est.stderr_im + 1e-12);
    CHECK(est.shots_used == 100000);
}

TEST_CASE("single-walk basis gives an exact estimate") {
    // n = 1: D = 1, diagonal amplitude 1, so X = lambda_2 every shot
    const PathBasis basis = PathBasis::enumerate(1, 3);
    const AJLParams params = AJLParams::make(0.8, 3);
    const TraceEstimate est = estimate_weighted_trace(BraidWord(1, {}), basis, params, {1000, 5, Parts::both});
    CHECK(est.estimate.real() == doctest::Approx(params.lambda(2)));
    CHECK(est.stderr_re == 0.0);
}

TEST_CASE("trefoil estimate within error bars") {
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    const BraidWord trefoil(2, {1, 1, 1});
    const Complex exact = weighted_trace(rho_ajl(trefoil, basis, params), basis, params);
    const TraceEstimate est = estimate_weighted_trace(trefoil, basis, params, {100000, 40, Parts::both});
    CHECK(std::abs(est.estimate.real() - exact.real()) <= 4.0 * est.stderr_re);
    CHECK(std::abs(est.estimate.imag() - exact.imag()) <= 4.0 * est.stderr_im);
    CHECK(est.stderr_re > 0.0);
    // sector estimates target lambda_k tr(M_k)
    REQUIRE(est.per_sector.size() == 2);
    CHECK(est.per_sector[0].node == 1);
    CHECK(est.per_sector[1].node == 3);
}

TEST_CASE("stderr halves when shots quadruple") {
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    const BraidWord trefoil(2, {1, 1, 1});
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL, 4ULL}) {
        const TraceEstimate small = estimate_weighted_trace(trefoil, basis, params, {25000, seed, Parts::both});
        const TraceEstimate big = estimate_weighted_trace(trefoil, basis, params, {100000, seed, Parts::both});
        const double ratio_re = small.stderr_re / big.stderr_re;
        const double ratio_im = small.stderr_im / big.stderr_im;
        CHECK(ratio_re > 1.6);
        CHECK(ratio_re < 2.4);
        CHECK(ratio_im > 1.6);
        CHECK(ratio_im < 2.4);
    }
}

TEST_CASE("estimates are unbiased across seeds") {
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    const BraidWord trefoil(2, {1, 1, 1});
    const Complex exact = weighted_trace(rho_ajl(trefoil, basis, params), basis, params);
    const int runs = 200;
    double sum_re = 0, sumsq_re = 0, sum_im = 0, sumsq_im = 0;
    for (int run = 0; run < runs; ++run) {
        const TraceEstimate est =
            estimate_weighted_trace(trefoil, basis, params, {10000, 500 + static_cast<std::uint64_t>(run), Parts::both});
        sum_re += est.estimate.real();
        sumsq_re += est.estimate.real() * est.estimate.real();
        sum_im += est.estimate.imag();
        sumsq_im += est.estimate.imag() * est.estimate.imag();
    }
    const double mean_re = sum_re / runs, mean_im = sum_im / runs;
    const double se_re = std::sqrt((sumsq_re - runs * mean_re * mean_re) / (runs - 1) / runs);
    const double se_im = std::sqrt((sumsq_im - runs * mean_im * mean_im) / (runs - 1) / runs);
    CHECK(std::abs(mean_re - exact.real()) <= 3.0 * se_re);
    CHECK(std::abs(mean_im - exact.imag()) <= 3.0 * se_im);
}

TEST_CASE("identical seeds reproduce bit-identically") {
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    const BraidWord trefoil(2, {1, 1, 1});
    const ShotPlan plan{50000, 77, Parts::both};
    const TraceEstimate a = estimate_weighted_trace(trefoil, basis, params, plan);
    const TraceEstimate b = estimate_weighted_trace(trefoil, basis, params, plan);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_re == b.stderr_re);
    CHECK(a.stderr_im == b.stderr_im);
    // a different seed gives a different draw
    const TraceEstimate c = estimate_weighted_trace(trefoil, basis, params, {50000, 78, Parts::both});
    CHECK(c.estimate != a.estimate);
}

TEST_CASE("jones estimates propagate the confidence radius") {
    // unknot as the identity 1-braid: V = 1 with zero radius (D = 1)
    {
        const PathBasis basis = PathBasis::enumerate(1, 3);
        const AJLParams params = AJLParams::make(0.8, 3);
        const JonesEstimate je = estimate_jones_ajl(BraidWord(1, {}), basis, params, {2000, 9, Parts::both});
        CHECK(std::abs(je.jones - Complex(1.0)) <= 4.0 * je.confidence_radius + 1e-9);
    }
    // trefoil against the exact oracle value
    {
        const PathBasis basis = PathBasis::enumerate(2, 4);
        const AJLParams params = AJLParams::make(0.4, 4);
        const BraidWord trefoil(2, {1, 1, 1});
        const JonesEstimate je = estimate_jones_ajl(trefoil, basis, params, {1000000, 12, Parts::both});
        const Complex exact = normalized_f(trefoil).eval_unit(params.A);
        CHECK(std::abs(je.jones - exact) <= 4.0 * je.confidence_radius);
        CHECK(je.confidence_radius < 0.02);
        // raw/reduced conventions stay consistent
        CHECK(std::abs(je.bracket_raw - je.bracket_reduced * Complex(params.d)) < 1e-12);
    }
    CHECK_THROWS_AS(estimate_jones_ajl(BraidWord(1, {}), PathBasis::enumerate(1, 3),
                                       AJLParams::make(0.8, 3), ShotPlan{100, 1, Parts::real_only}),
                    std::invalid_argument);
}

TEST_CASE("kl3 shot path agrees with the closed form") {
    const KLParams params = KLParams::from_theta(1.2); // inside [pi/3, 2pi/3]
    const BraidWord b(3, {1, 2, -1, 2});
    const Complex exact_tr = rho3(b, params).trace();
    const TraceEstimate est = estimate_trace_kl3(b, params, {200000, 31, Parts::both});
    CHECK(std::abs(est.estimate.real() - exact_tr.real()) <= 4.0 * est.stderr_re);
    CHECK(std::abs(est.estimate.imag() - exact_tr.imag()) <= 4.0 * est.stderr_im);

    const JonesEstimate je = estimate_jones_kl3(b, params, {200000, 31, Parts::both});
    const Complex exact_bracket = bracket_kl3(b, params);
    CHECK(std::abs(je.bracket_reduced - exact_bracket) <= 4.0 * je.confidence_radius + 1e-12);
    CHECK(std::abs(je.jones - jones_kl3(b, params)) <= 4.0 * je.confidence_radius);
    CHECK(je.trace.per_sector.empty());
}
