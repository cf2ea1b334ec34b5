#pragma once

#include "jones/ajl.hpp"
#include "jones/braid.hpp"
#include "jones/kl3.hpp"
#include "jones/markov.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace jones {

enum class Parts { real_only, imag_only, both };

// A reproducible sampling budget: identical (plan, braid, params) give
// bit-identical estimates. Streams (real part, imaginary part) derive their
// engines from seed and a stream index, so they stay independent.
struct ShotPlan {
    std::uint64_t shots = 100000;
    std::uint64_t seed = 1;
    Parts parts = Parts::both;
};

// Deterministic stream RNG. Uniform doubles are produced from raw 64-bit
// draws rather than std::distributions so results are identical across
// standard library implementations.
class ShotRng {
  public:
    ShotRng(std::uint64_t seed, std::uint64_t stream);
    double uniform(); // [0, 1)
    std::size_t below(std::size_t n);

  private:
    std::mt19937_64 eng_;
};

// One ancilla measurement of the Hadamard test on <p|U|p>: returns 0 with
// probability (1 + Re(phase * <p|U|p>))/2, else 1. phase = 1 probes the real
// part, phase = -i the imaginary part (the S-dagger variant). The diagonal
// amplitude is read from the stored matrix: this reproduces the measurement
// statistics, not gate-level dynamics. U must be unitary to 1e-8.
int hadamard_shot(const Matrix& U, std::size_t p, Complex phase, ShotRng& rng);

struct TraceEstimate {
    Complex estimate;
    double stderr_re = 0.0;
    double stderr_im = 0.0;
    std::uint64_t shots_used = 0;

    struct Sector {
        int node;
        double re;
        double im;
    };
    std::vector<Sector> per_sector; // estimates of lambda_k tr(M_k); empty for plain traces
};

// Monte-Carlo estimate of TR(rho(b)) = sum_k lambda_k tr(M_k): per shot a
// basis walk p is drawn uniformly, the Hadamard-test bit sampled on
// <p|rho(b)|p>, and D * lambda_{end(p)} * (1 - 2 bit) accumulated. Only the
// diagonal amplitude of the sampled p feeds each Bernoulli draw.
TraceEstimate estimate_weighted_trace(const BraidWord& b, const PathBasis& basis, const AJLParams& params,
                                      const ShotPlan& plan);

// Same shot scheme on the 2x2 KL3 unitary, estimating the plain trace.
TraceEstimate estimate_trace_kl3(const BraidWord& b, const KLParams& params, const ShotPlan& plan);

// Trace estimate pushed through the deterministic post-processing chain to a
// Jones value, with the 1-sigma confidence radius propagated through the
// scalar factors.
struct JonesEstimate {
    TraceEstimate trace;
    Complex bracket_raw;     // d^c loop convention
    Complex bracket_reduced; // unknot = 1 convention
    Complex jones;           // f = (-A^3)^{-I(b)} * reduced; V(t) at t = A^-4
    double confidence_radius = 0.0;
};

JonesEstimate estimate_jones_ajl(const BraidWord& b, const PathBasis& basis, const AJLParams& params,
                                 const ShotPlan& plan);

JonesEstimate estimate_jones_kl3(const BraidWord& b, const KLParams& params, const ShotPlan& plan);

} // namespace jones
