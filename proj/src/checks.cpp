#include "jones/checks.hpp"

#include "jones/ajl.hpp"
#include "jones/bracket.hpp"
#include "jones/hadamard.hpp"
#include "jones/kl3.hpp"
#include "jones/markov.hpp"
#include "jones/matrix.hpp"
#include "jones/path_basis.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace jones {

namespace {

constexpr double kPi = std::numbers::pi;

using Rng = std::mt19937_64;

BraidWord random_word(Rng& rng, int n, int max_len, int min_len = 0) {
    std::uniform_int_distribution<int> len_dist(min_len, max_len);
    std::uniform_int_distribution<int> gen_dist(1, n - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    const int len = len_dist(rng);
    std::vector<int> letters;
    letters.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) letters.push_back(gen_dist(rng) * (sign_dist(rng) ? 1 : -1));
    return BraidWord(n, std::move(letters));
}

std::vector<int> random_tl_word(Rng& rng, int n, int max_len) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(1, n - 1);
    const int len = len_dist(rng);
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(len));
    for (int k = 0; k < len; ++k) word.push_back(gen_dist(rng));
    return word;
}

double random_theta(Rng& rng, double lo, double hi) {
    std::uniform_real_distribution<double> dist(lo, hi);
    return dist(rng);
}

// Random theta inside the closed unitary ranges, away from delta = 0.
double random_kl3_theta(Rng& rng) {
    auto ranges = unitary_theta_ranges();
    std::uniform_int_distribution<std::size_t> pick(0, ranges.size() - 1);
    auto [lo, hi] = ranges[pick(rng)];
    return random_theta(rng, lo + 1e-3, hi - 1e-3);
}

CheckCase residual_case(std::string name, double worst, double tol, std::string detail = {}) {
    CheckCase c;
    c.name = std::move(name);
    c.worst = worst;
    c.tolerance = tol;
    c.pass = worst <= tol;
    c.detail = std::move(detail);
    return c;
}

CheckCase tl_relations(Rng& rng, CheckLevel level) {
    const int n_max = level == CheckLevel::full ? 6 : 4;
    const int thetas = level == CheckLevel::full ? 20 : 5;
    double worst_rel = 0.0, worst_comm = 0.0;
    for (int n = 2; n <= n_max; ++n) {
        const int r = n + 2;
        const PathBasis basis = PathBasis::enumerate(n, r);
        for (int t = 0; t < thetas; ++t) {
            const AJLParams params = AJLParams::make(random_theta(rng, 1e-3, kPi / r), r);
            const std::vector<Matrix> es = build_all_E(basis, params);
            for (int i = 0; i < n - 1; ++i) {
                worst_rel = std::max(worst_rel, max_abs_diff(es[i] * es[i], es[i].scaled(params.d)));
                if (i + 1 < n - 1) {
                    worst_rel = std::max(worst_rel, max_abs_diff(es[i] * es[i + 1] * es[i], es[i]));
                    worst_rel = std::max(worst_rel, max_abs_diff(es[i + 1] * es[i] * es[i + 1], es[i + 1]));
                }
                for (int j = i + 2; j < n - 1; ++j)
                    worst_comm = std::max(worst_comm, max_abs_diff(es[i] * es[j], es[j] * es[i]));
            }
        }
    }
    CheckCase c = residual_case("tl_relations", worst_rel, 1e-10);
    c.pass = c.pass && worst_comm <= 1e-12;
    c.detail = "distant commutation worst " + std::to_string(worst_comm) + " (tol 1e-12)";
    return c;
}

CheckCase ajl_unitarity(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 20 : 5;
    double worst = 0.0;
    for (int n = 2; n <= 5; ++n) {
        const int r = n + 2;
        const PathBasis basis = PathBasis::enumerate(n, r);
        for (int t = 0; t < reps; ++t) {
            const AJLParams params = AJLParams::make(random_theta(rng, 1e-3, kPi / r), r);
            for (int i = 1; i <= n - 1; ++i) {
                BraidWord gen(n, {i});
                worst = std::max(worst, unitarity_defect(rho_ajl(gen, basis, params)));
            }
        }
    }
    return residual_case("ajl_unitarity", worst, 1e-10);
}

CheckCase ajl_inverse(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 50 : 10;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int r = n + 2;
        const PathBasis basis = PathBasis::enumerate(n, r);
        const AJLParams params = AJLParams::make(random_theta(rng, 1e-3, kPi / r), r);
        const BraidWord b = random_word(rng, n, 10);
        const Matrix prod = rho_ajl(b, basis, params) * rho_ajl(inverse(b), basis, params);
        worst = std::max(worst, max_abs_diff(prod, Matrix::identity(basis.dim())));
    }
    return residual_case("ajl_rho_inverse", worst, 1e-9);
}

CheckCase ajl_eigenvalues(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 20 : 5;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int r = n + 2;
        const PathBasis basis = PathBasis::enumerate(n, r);
        const AJLParams params = AJLParams::make(random_theta(rng, 1e-3, kPi / r), r);
        const Complex A = params.A;
        for (int i = 1; i <= n - 1; ++i) {
            const Matrix rho = rho_ajl(BraidWord(n, {i}), basis, params);
            // E_i/d is a projector, so (rho - A)(rho + A^-3) vanishes
            const Matrix lhs = scaled_identity_plus(-A, 1.0, rho) * scaled_identity_plus(ipow(A, -3), 1.0, rho);
            worst = std::max(worst, lhs.max_abs());
        }
    }
    return residual_case("ajl_eigenvalue_set", worst, 1e-10);
}

CheckCase kl3_paper_traces(Rng& rng) {
    double worst = 0.0;
    for (int t = 0; t < 10; ++t) {
        const KLParams params = KLParams::from_theta(random_kl3_theta(rng));
        auto [u1, u2] = u_matrices(params);
        worst = std::max(worst, std::abs(u1.trace() - Complex(params.delta)));
        worst = std::max(worst, std::abs(u2.trace() - Complex(params.delta)));
        worst = std::max(worst, std::abs((u1 * u2).trace() - Complex(1.0)));
        worst = std::max(worst, std::abs((u2 * u1).trace() - Complex(1.0)));
        worst = std::max(worst, max_abs_diff(u1 * u2 * u1, u1));
        worst = std::max(worst, max_abs_diff(u2 * u1 * u2, u2));
    }
    return residual_case("kl3_paper_traces", worst, 1e-12);
}

CheckCase kl3_unitarity(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 50 : 10;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const KLParams params = KLParams::from_theta(random_kl3_theta(rng));
        worst = std::max(worst, unitarity_defect(rho3(BraidWord(3, {1}), params)));
        worst = std::max(worst, unitarity_defect(rho3(BraidWord(3, {2}), params)));
    }
    return residual_case("kl3_unitarity", worst, 1e-10);
}

CheckCase kl3_braid_relation(Rng& rng) {
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const KLParams params = KLParams::from_theta(random_kl3_theta(rng));
        const Matrix lhs = rho3(BraidWord(3, {1, 2, 1}), params);
        const Matrix rhs = rho3(BraidWord(3, {2, 1, 2}), params);
        worst = std::max(worst, max_abs_diff(lhs, rhs));
    }
    return residual_case("kl3_braid_relation", worst, 1e-10);
}

CheckCase kl3_eigenvalues(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 50 : 10;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const KLParams params = KLParams::from_theta(random_kl3_theta(rng));
        const Complex A = params.A;
        for (int i = 1; i <= 2; ++i) {
            const Matrix rho = rho3(BraidWord(3, {i}), params);
            const Complex tr = rho.trace();
            const Complex det = rho(0, 0) * rho(1, 1) - rho(0, 1) * rho(1, 0);
            const Complex disc = std::sqrt(tr * tr - 4.0 * det);
            const Complex l1 = 0.5 * (tr + disc), l2 = 0.5 * (tr - disc);
            const Complex e1 = A, e2 = -ipow(A, -3);
            const double pairing1 = std::max(std::abs(l1 - e1), std::abs(l2 - e2));
            const double pairing2 = std::max(std::abs(l1 - e2), std::abs(l2 - e1));
            worst = std::max(worst, std::min(pairing1, pairing2));
        }
    }
    return residual_case("kl3_eigenvalue_set", worst, 1e-10);
}

CheckCase unitary_intervals(CheckLevel level) {
    const int grid = level == CheckLevel::full ? 10000 : 2000;
    const auto ranges = unitary_theta_ranges();
    const double step = 2.0 * kPi / grid;
    int mismatches = 0;
    for (int k = 0; k <= grid; ++k) {
        const double theta = k * step;
        bool in_union = false;
        double boundary_dist = 1e9;
        for (auto [lo, hi] : ranges) {
            if (theta >= lo && theta <= hi) in_union = true;
            boundary_dist = std::min({boundary_dist, std::abs(theta - lo), std::abs(theta - hi)});
        }
        if (is_unitary_theta(theta) != in_union && boundary_dist > step) ++mismatches;
    }
    CheckCase c = residual_case("kl3_unitary_intervals", mismatches, 0.0);
    c.detail = std::to_string(grid + 1) + " grid points, mismatches away from boundaries: " +
               std::to_string(mismatches);
    return c;
}

CheckCase kl3_oracle_equiv(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 100 : 20;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const KLParams params = KLParams::from_theta(random_kl3_theta(rng));
        const BraidWord b = random_word(rng, 3, 10);
        const Complex via_rep = bracket_kl3(b, params);
        const Complex via_oracle = reduced_bracket(b).eval_unit(params.A);
        worst = std::max(worst, std::abs(via_rep - via_oracle));
    }
    return residual_case("kl3_oracle_equivalence", worst, 1e-9);
}

CheckCase ajl_oracle_equiv(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 50 : 10;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int r = n + 2;
        const PathBasis basis = PathBasis::enumerate(n, r);
        const AJLParams params = AJLParams::make(random_theta(rng, 0.05, kPi / r), r);
        const BraidWord b = random_word(rng, n, 8);
        const Complex via_trace = bracket_ajl(b, basis, params);
        const Complex via_oracle = raw_bracket(b).eval_unit(params.A);
        worst = std::max(worst, std::abs(via_trace - via_oracle));
    }
    return residual_case("ajl_oracle_equivalence", worst, 1e-9);
}

CheckCase sector_blocks(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 30 : 8;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const int r = n + 2;
        const PathBasis basis = PathBasis::enumerate(n, r);
        const AJLParams params = AJLParams::make(random_theta(rng, 1e-3, kPi / r), r);
        const BraidWord b = random_word(rng, n, 10);
        worst = std::max(worst, off_sector_mass(rho_ajl(b, basis, params), basis));
    }
    return residual_case("sector_block_diagonality", worst, 1e-12);
}

CheckCase tr_cyclic(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 40 : 10;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4);
        const int r = n + 2;
        const PathBasis basis = PathBasis::enumerate(n, r);
        const AJLParams params = AJLParams::make(random_theta(rng, 1e-3, kPi / r), r);
        const Matrix x = tl_word_matrix(random_tl_word(rng, n, 6), basis, params);
        const Matrix y = tl_word_matrix(random_tl_word(rng, n, 6), basis, params);
        worst = std::max(worst, std::abs(weighted_trace(x * y, basis, params) -
                                         weighted_trace(y * x, basis, params)));
    }
    return residual_case("weighted_trace_cyclic", worst, 1e-10);
}

CheckCase markov_property(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 50 : 10;
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const int n = 2 + static_cast<int>(rng() % 4); // 2..5
        const int r = n + 3;
        const AJLParams params = AJLParams::make(random_theta(rng, 1e-3, kPi / r), r);
        worst = std::max(worst, markov_residual(random_tl_word(rng, n, 8), n, params));
    }
    return residual_case("markov_property", worst, 1e-9);
}

CheckCase truncation_counterexample() {
    const AJLParams generic = AJLParams::make(0.5, 4);
    const double broken = markov_residual({}, 2, generic);
    const AJLParams root = AJLParams::make(kPi / 4.0, 4);
    const double rescued = markov_residual({}, 2, root);
    CheckCase c;
    c.name = "truncation_counterexample";
    c.pass = broken > 1e-3 && rescued <= 1e-10;
    c.worst = rescued;
    c.tolerance = 1e-10;
    c.detail = "generic theta=0.5 residual " + std::to_string(broken) + " (> 1e-3 expected); theta=pi/4 residual " +
               std::to_string(rescued);
    return c;
}

CheckCase kl3_ajl_specialization(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 25 : 5;
    const PathBasis basis = PathBasis::enumerate(3, 5);
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) {
        const double theta = random_theta(rng, 1e-3, kPi / 5);
        const AJLParams ajl = AJLParams::make(theta, 5);
        const KLParams kl = KLParams::from_theta(kPi / 2 + theta / 2);
        const BraidWord b = random_word(rng, 3, 8);
        const Complex via_ajl = bracket_ajl(b, basis, ajl) / ajl.d;
        const Complex via_kl3 = bracket_kl3(b, kl);
        worst = std::max(worst, std::abs(via_ajl - via_kl3));
    }
    return residual_case("kl3_equals_ajl_specialization", worst, 1e-9);
}

CheckCase fold_vs_state_sum(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 500 : 60;
    int equal = 0;
    for (int t = 0; t < reps; ++t) {
        const int n = 2 + static_cast<int>(rng() % 3);
        const BraidWord b = random_word(rng, n, 12);
        if (raw_bracket(b) == tl_fold_bracket(b)) ++equal;
    }
    CheckCase c;
    c.name = "bracket_fold_equals_state_sum";
    c.pass = equal == reps;
    c.worst = static_cast<double>(reps - equal);
    c.tolerance = 0.0;
    c.detail = std::to_string(equal) + "/" + std::to_string(reps) + " exact matches";
    return c;
}

CheckCase bracket_invariance(Rng& rng, CheckLevel level) {
    const int reps = level == CheckLevel::full ? 100 : 20;
    int failures = 0;
    for (int t = 0; t < reps; ++t) {
        const int n = 3 + static_cast<int>(rng() % 2);
        const BraidWord b = random_word(rng, n, 9);

        // Reidemeister II: insert sigma_i sigma_i^-1
        {
            const int i = 1 + static_cast<int>(rng() % (n - 1));
            std::vector<int> ls = b.letters;
            const std::size_t pos = ls.empty() ? 0 : rng() % (ls.size() + 1);
            ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(pos), {i, -i});
            if (!(raw_bracket(BraidWord(n, ls)) == raw_bracket(b))) ++failures;
        }
        // Reidemeister III: sigma_i sigma_{i+1} sigma_i vs sigma_{i+1} sigma_i sigma_{i+1}
        {
            const int i = 1 + static_cast<int>(rng() % (n - 2));
            std::vector<int> left = b.letters, right = b.letters;
            left.insert(left.end(), {i, i + 1, i});
            right.insert(right.end(), {i + 1, i, i + 1});
            if (!(raw_bracket(BraidWord(n, left)) == raw_bracket(BraidWord(n, right)))) ++failures;
        }
        // Markov stabilization: f(b) = f(b sigma_n^{+-1}) one strand up
        {
            const int sign = (rng() % 2) ? 1 : -1;
            BraidWord wide = embed(b, n + 1);
            wide.letters.push_back(sign * n);
            if (!(normalized_f(BraidWord(n + 1, wide.letters)) == normalized_f(b))) ++failures;
        }
    }
    CheckCase c;
    c.name = "bracket_invariance_moves";
    c.pass = failures == 0;
    c.worst = failures;
    c.tolerance = 0.0;
    c.detail = std::to_string(reps) + " words x {R-II insertion, R-III rewrite, stabilization}, exact equality";
    return c;
}

CheckCase hadamard_within_bars(CheckLevel level) {
    const int runs = level == CheckLevel::full ? 20 : 5;
    const std::uint64_t shots = level == CheckLevel::full ? 100000 : 20000;
    const BraidWord trefoil(2, {1, 1, 1});
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    const Complex exact = weighted_trace(rho_ajl(trefoil, basis, params), basis, params);
    int hits = 0;
    for (int run = 0; run < runs; ++run) {
        ShotPlan plan{shots, 7000 + static_cast<std::uint64_t>(run), Parts::both};
        const TraceEstimate est = estimate_weighted_trace(trefoil, basis, params, plan);
        const bool ok_re = std::abs(est.estimate.real() - exact.real()) <= 4.0 * est.stderr_re;
        const bool ok_im = std::abs(est.estimate.imag() - exact.imag()) <= 4.0 * est.stderr_im;
        if (ok_re && ok_im) ++hits;
    }
    CheckCase c;
    c.name = "hadamard_within_4_stderr";
    const int need = runs - runs / 10; // 18/20 at full
    c.pass = hits >= need;
    c.worst = runs - hits;
    c.tolerance = static_cast<double>(runs / 10);
    c.detail = std::to_string(hits) + "/" + std::to_string(runs) + " runs inside 4 stderr";
    return c;
}

CheckCase hadamard_scaling(CheckLevel level) {
    const std::uint64_t base = level == CheckLevel::full ? 100000 : 20000;
    const BraidWord trefoil(2, {1, 1, 1});
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    double worst_lo = 10.0, worst_hi = 0.0;
    for (std::uint64_t seed = 11; seed < 14; ++seed) {
        const TraceEstimate small = estimate_weighted_trace(trefoil, basis, params, {base, seed, Parts::both});
        const TraceEstimate big =
            estimate_weighted_trace(trefoil, basis, params, {4 * base, seed, Parts::both});
        const double ratio = small.stderr_re / big.stderr_re;
        worst_lo = std::min(worst_lo, ratio);
        worst_hi = std::max(worst_hi, ratio);
    }
    CheckCase c;
    c.name = "hadamard_stderr_scaling";
    c.pass = worst_lo >= 1.6 && worst_hi <= 2.4;
    c.worst = worst_hi;
    c.tolerance = 2.4;
    c.detail = "stderr ratio across 4x shots in [" + std::to_string(worst_lo) + ", " + std::to_string(worst_hi) +
               "] (want [1.6, 2.4])";
    return c;
}

CheckCase hadamard_unbiased(CheckLevel level) {
    const int runs = level == CheckLevel::full ? 200 : 40;
    const std::uint64_t shots = 10000;
    const BraidWord trefoil(2, {1, 1, 1});
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    const Complex exact = weighted_trace(rho_ajl(trefoil, basis, params), basis, params);
    double sum_re = 0, sum_im = 0, sumsq_re = 0, sumsq_im = 0;
    for (int run = 0; run < runs; ++run) {
        ShotPlan plan{shots, 9000 + static_cast<std::uint64_t>(run), Parts::both};
        const TraceEstimate est = estimate_weighted_trace(trefoil, basis, params, plan);
        sum_re += est.estimate.real();
        sum_im += est.estimate.imag();
        sumsq_re += est.estimate.real() * est.estimate.real();
        sumsq_im += est.estimate.imag() * est.estimate.imag();
    }
    const double nr = runs;
    const double mean_re = sum_re / nr, mean_im = sum_im / nr;
    const double se_re = std::sqrt(std::max(0.0, (sumsq_re - nr * mean_re * mean_re) / (nr - 1)) / nr);
    const double se_im = std::sqrt(std::max(0.0, (sumsq_im - nr * mean_im * mean_im) / (nr - 1)) / nr);
    const double dev_re = std::abs(mean_re - exact.real());
    const double dev_im = std::abs(mean_im - exact.imag());
    CheckCase c;
    c.name = "hadamard_unbiasedness";
    c.pass = dev_re <= 3.0 * se_re && dev_im <= 3.0 * se_im;
    c.worst = std::max(se_re > 0 ? dev_re / se_re : 0.0, se_im > 0 ? dev_im / se_im : 0.0);
    c.tolerance = 3.0;
    c.detail = std::to_string(runs) + " runs x " + std::to_string(shots) + " shots; deviation in stderr-of-mean units";
    return c;
}

CheckCase hadamard_reproducible() {
    const BraidWord trefoil(2, {1, 1, 1});
    const PathBasis basis = PathBasis::enumerate(2, 4);
    const AJLParams params = AJLParams::make(0.4, 4);
    ShotPlan plan{50000, 424242, Parts::both};
    const TraceEstimate a = estimate_weighted_trace(trefoil, basis, params, plan);
    const TraceEstimate b = estimate_weighted_trace(trefoil, basis, params, plan);
    CheckCase c;
    c.name = "hadamard_reproducibility";
    c.pass = a.estimate == b.estimate && a.stderr_re == b.stderr_re && a.stderr_im == b.stderr_im;
    c.worst = c.pass ? 0.0 : 1.0;
    c.tolerance = 0.0;
    c.detail = "identical seeds give bit-identical estimates";
    return c;
}

} // namespace

CheckReport run_checks(CheckLevel level, std::uint64_t seed) {
    Rng rng(seed);
    CheckReport report;
    report.level = level;
    report.cases.push_back(tl_relations(rng, level));
    report.cases.push_back(ajl_unitarity(rng, level));
    report.cases.push_back(ajl_inverse(rng, level));
    report.cases.push_back(ajl_eigenvalues(rng, level));
    report.cases.push_back(kl3_paper_traces(rng));
    report.cases.push_back(kl3_unitarity(rng, level));
    report.cases.push_back(kl3_braid_relation(rng));
    report.cases.push_back(kl3_eigenvalues(rng, level));
    report.cases.push_back(unitary_intervals(level));
    report.cases.push_back(kl3_oracle_equiv(rng, level));
    report.cases.push_back(ajl_oracle_equiv(rng, level));
    report.cases.push_back(sector_blocks(rng, level));
    report.cases.push_back(tr_cyclic(rng, level));
    report.cases.push_back(markov_property(rng, level));
    report.cases.push_back(truncation_counterexample());
    report.cases.push_back(kl3_ajl_specialization(rng, level));
    report.cases.push_back(fold_vs_state_sum(rng, level));
    report.cases.push_back(bracket_invariance(rng, level));
    report.cases.push_back(hadamard_within_bars(level));
    report.cases.push_back(hadamard_scaling(level));
    report.cases.push_back(hadamard_unbiased(level));
    report.cases.push_back(hadamard_reproducible());
    report.all_pass = true;
    for (const auto& c : report.cases) report.all_pass = report.all_pass && c.pass;
    return report;
}

} // namespace jones
