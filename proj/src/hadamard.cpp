#include "jones/hadamard.hpp"

#include "jones/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace jones {

namespace {

constexpr double kUnitaryTol = 1e-8;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

} // namespace

ShotRng::ShotRng(std::uint64_t seed, std::uint64_t stream) : eng_(splitmix64(seed ^ splitmix64(stream))) {}

double ShotRng::uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

std::size_t ShotRng::below(std::size_t n) {
    std::size_t i = static_cast<std::size_t>(uniform() * static_cast<double>(n));
    return i < n ? i : n - 1;
}

int hadamard_shot(const Matrix& U, std::size_t p, Complex phase, ShotRng& rng) {
    if (U.rows() != U.cols()) throw std::invalid_argument("hadamard_shot needs a square matrix");
    if (p >= U.rows()) throw std::invalid_argument("basis index out of range");
    if (unitarity_defect(U) > kUnitaryTol) throw std::invalid_argument("hadamard_shot: U is not unitary");
    const double p0 = std::clamp(0.5 * (1.0 + (phase * U(p, p)).real()), 0.0, 1.0);
    return rng.uniform() < p0 ? 0 : 1;
}

namespace {

// The sampling core sees only diagonal amplitudes and per-walk importance
// weights; off-diagonal entries and the exact trace never enter the loop.
struct DiagSampler {
    std::vector<Complex> diag;
    std::vector<double> weight; // lambda_{end(p)}, or 1 for plain traces
    std::vector<int> node;      // endpoint per walk; empty for plain traces
};

struct StreamStats {
    double mean = 0.0;
    double stderr_mean = 0.0;
    std::map<int, double> sector_mean;
};

StreamStats run_stream(const DiagSampler& s, Complex phase, std::uint64_t shots, ShotRng rng) {
    const std::size_t dim = s.diag.size();
    const double scale = static_cast<double>(dim);
    // Welford accumulation: stable, and exactly zero variance when every
    // draw is the same (one-walk bases).
    double mean = 0.0, m2 = 0.0;
    std::uint64_t count = 0;
    std::map<int, double> sector_sum;
    for (std::uint64_t k = 0; k < shots; ++k) {
        const std::size_t p = rng.below(dim);
        const double p0 = std::clamp(0.5 * (1.0 + (phase * s.diag[p]).real()), 0.0, 1.0);
        const int bit = rng.uniform() < p0 ? 0 : 1;
        const double x = scale * s.weight[p] * (1 - 2 * bit);
        ++count;
        const double d1 = x - mean;
        mean += d1 / static_cast<double>(count);
        m2 += d1 * (x - mean);
        if (!s.node.empty()) sector_sum[s.node[p]] += x;
    }
    StreamStats st;
    st.mean = mean;
    if (shots >= 2) {
        const double var = m2 / static_cast<double>(shots - 1);
        st.stderr_mean = std::sqrt(var / static_cast<double>(shots));
    }
    for (const auto& [node, ssum] : sector_sum) st.sector_mean[node] = ssum / static_cast<double>(shots);
    return st;
}

TraceEstimate run_plan(const DiagSampler& s, const ShotPlan& plan) {
    if (plan.shots < 1) throw std::invalid_argument("shot plan needs at least one shot");
    const Complex phase_re = 1.0;
    const Complex phase_im(0.0, -1.0);

    TraceEstimate est;
    std::map<int, TraceEstimate::Sector> sectors;
    auto merge_sectors = [&](const StreamStats& st, bool imag) {
        for (const auto& [node, mean] : st.sector_mean) {
            auto [it, inserted] = sectors.try_emplace(node, TraceEstimate::Sector{node, 0.0, 0.0});
            (imag ? it->second.im : it->second.re) = mean;
        }
    };

    if (plan.parts == Parts::real_only) {
        StreamStats st = run_stream(s, phase_re, plan.shots, ShotRng(plan.seed, 0));
        est.estimate = Complex(st.mean, 0.0);
        est.stderr_re = st.stderr_mean;
        est.shots_used = plan.shots;
        merge_sectors(st, false);
    } else if (plan.parts == Parts::imag_only) {
        StreamStats st = run_stream(s, phase_im, plan.shots, ShotRng(plan.seed, 1));
        est.estimate = Complex(0.0, st.mean);
        est.stderr_im = st.stderr_mean;
        est.shots_used = plan.shots;
        merge_sectors(st, true);
    } else {
        if (plan.shots < 2)
            throw std::invalid_argument("a both-parts plan splits its budget and needs at least 2 shots");
        const std::uint64_t nre = plan.shots / 2;
        const std::uint64_t nim = plan.shots - nre;
        StreamStats sre = run_stream(s, phase_re, nre, ShotRng(plan.seed, 0));
        StreamStats sim = run_stream(s, phase_im, nim, ShotRng(plan.seed, 1));
        est.estimate = Complex(sre.mean, sim.mean);
        est.stderr_re = sre.stderr_mean;
        est.stderr_im = sim.stderr_mean;
        est.shots_used = plan.shots;
        merge_sectors(sre, false);
        merge_sectors(sim, true);
    }
    for (const auto& [node, sec] : sectors) est.per_sector.push_back(sec);
    return est;
}

} // namespace

TraceEstimate estimate_weighted_trace(const BraidWord& b, const PathBasis& basis, const AJLParams& params,
                                      const ShotPlan& plan) {
    const Matrix U = rho_ajl(b, basis, params);
    if (unitarity_defect(U) > kUnitaryTol)
        throw std::invalid_argument("estimate_weighted_trace: rho(b) is not unitary");
    DiagSampler s;
    s.diag = U.diagonal();
    s.weight.reserve(basis.dim());
    s.node.reserve(basis.dim());
    for (std::size_t i = 0; i < basis.dim(); ++i) {
        s.weight.push_back(params.lambda(basis.endpoint(i)));
        s.node.push_back(basis.endpoint(i));
    }
    return run_plan(s, plan);
}

TraceEstimate estimate_trace_kl3(const BraidWord& b, const KLParams& params, const ShotPlan& plan) {
    const Matrix U = rho3(b, params);
    if (unitarity_defect(U) > kUnitaryTol)
        throw std::invalid_argument("estimate_trace_kl3: rho(b) is not unitary");
    DiagSampler s;
    s.diag = U.diagonal();
    s.weight.assign(s.diag.size(), 1.0);
    return run_plan(s, plan);
}

JonesEstimate estimate_jones_ajl(const BraidWord& b, const PathBasis& basis, const AJLParams& params,
                                 const ShotPlan& plan) {
    if (plan.parts != Parts::both)
        throw std::invalid_argument("a Jones estimate needs both real and imaginary shot streams");
    JonesEstimate je;
    je.trace = estimate_weighted_trace(b, basis, params, plan);
    const Complex scale_raw = 1.0 / params.lambda(1);
    je.bracket_raw = je.trace.estimate * scale_raw;
    je.bracket_reduced = je.bracket_raw / params.d;
    const Complex norm = ipow(-ipow(params.A, 3), -exponent_sum(b));
    je.jones = norm * je.bracket_reduced;
    const double sigma = std::hypot(je.trace.stderr_re, je.trace.stderr_im);
    je.confidence_radius = sigma * std::abs(scale_raw / params.d) * std::abs(norm);
    return je;
}

JonesEstimate estimate_jones_kl3(const BraidWord& b, const KLParams& params, const ShotPlan& plan) {
    if (plan.parts != Parts::both)
        throw std::invalid_argument("a Jones estimate needs both real and imaginary shot streams");
    JonesEstimate je;
    je.trace = estimate_trace_kl3(b, params, plan);
    const double d2 = params.delta * params.delta;
    je.bracket_reduced = je.trace.estimate + ipow(params.A, exponent_sum(b)) * (d2 - 2.0);
    je.bracket_raw = je.bracket_reduced * params.delta;
    const Complex norm = ipow(-ipow(params.A, 3), -exponent_sum(b));
    je.jones = norm * je.bracket_reduced;
    const double sigma = std::hypot(je.trace.stderr_re, je.trace.stderr_im);
    je.confidence_radius = sigma * std::abs(norm);
    return je;
}

} // namespace jones
