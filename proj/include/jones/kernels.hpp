#pragma once

#include <complex>
#include <cstddef>
#include <string>

namespace jones::kernels {

// Dense complex matrix multiply is the one data-parallel inner loop of this
// project (representation matrices are rebuilt per braid letter in sweeps,
// check suites and the shot simulator). A scalar reference kernel and an
// AVX2+FMA variant are provided; the variant is chosen once at runtime from
// CPU capabilities and the two are equivalence-tested against each other.

enum class Impl { scalar, avx2 };

bool avx2_supported();

// The implementation currently in use. Defaults to the best supported one;
// the JONES_KERNEL environment variable ("scalar" or "avx2") overrides.
Impl active();

// Force an implementation (throws std::invalid_argument if unsupported).
void set_impl(Impl impl);

const char* impl_name(Impl impl);

// C = A * B with A (n x m), B (m x p), C (n x p), all row-major and
// non-aliasing. C is overwritten.
void gemm(const std::complex<double>* A, const std::complex<double>* B, std::complex<double>* C,
          std::size_t n, std::size_t m, std::size_t p);

void gemm_scalar(const std::complex<double>* A, const std::complex<double>* B, std::complex<double>* C,
                 std::size_t n, std::size_t m, std::size_t p);

#if defined(__x86_64__) || defined(_M_X64)
void gemm_avx2(const std::complex<double>* A, const std::complex<double>* B, std::complex<double>* C,
               std::size_t n, std::size_t m, std::size_t p);
#endif

} // namespace jones::kernels
