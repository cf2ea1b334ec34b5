#include "jones/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <stdexcept>

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#endif

namespace jones::kernels {

void gemm_scalar(const std::complex<double>* A, const std::complex<double>* B, std::complex<double>* C,
                 std::size_t n, std::size_t m, std::size_t p) {
    std::memset(static_cast<void*>(C), 0, n * p * sizeof(std::complex<double>));
    for (std::size_t i = 0; i < n; ++i) {
        std::complex<double>* c_row = C + i * p;
        for (std::size_t k = 0; k < m; ++k) {
            const std::complex<double> a = A[i * m + k];
            const std::complex<double>* b_row = B + k * p;
            for (std::size_t j = 0; j < p; ++j) c_row[j] += a * b_row[j];
        }
    }
}

#if defined(__x86_64__) || defined(_M_X64)

// Interleaved (re, im) layout is guaranteed for std::complex arrays, so two
// complex doubles fill one 256-bit lane. Per accumulation step:
//   c += a*b  with  a*b = fmaddsub(re(a)*b, im(a)*swap(b))
// where swap exchanges re/im within each 128-bit half.
__attribute__((target("avx2,fma"))) void gemm_avx2(const std::complex<double>* A,
                                                   const std::complex<double>* B,
                                                   std::complex<double>* C, std::size_t n,
                                                   std::size_t m, std::size_t p) {
    std::memset(static_cast<void*>(C), 0, n * p * sizeof(std::complex<double>));
    const double* b_all = reinterpret_cast<const double*>(B);
    for (std::size_t i = 0; i < n; ++i) {
        double* c_row = reinterpret_cast<double*>(C + i * p);
        for (std::size_t k = 0; k < m; ++k) {
            const std::complex<double> a = A[i * m + k];
            const __m256d ar = _mm256_set1_pd(a.real());
            const __m256d ai = _mm256_set1_pd(a.imag());
            const double* b_row = b_all + 2 * k * p;
            std::size_t j = 0;
            for (; j + 2 <= p; j += 2) {
                const __m256d b = _mm256_loadu_pd(b_row + 2 * j);
                const __m256d bswap = _mm256_permute_pd(b, 0x5);
                const __m256d prod = _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, bswap));
                const __m256d c = _mm256_add_pd(_mm256_loadu_pd(c_row + 2 * j), prod);
                _mm256_storeu_pd(c_row + 2 * j, c);
            }
            for (; j < p; ++j) {
                const std::complex<double> bb = B[k * p + j];
                const double re = a.real() * bb.real() - a.imag() * bb.imag();
                const double im = a.real() * bb.imag() + a.imag() * bb.real();
                c_row[2 * j] += re;
                c_row[2 * j + 1] += im;
            }
        }
    }
}

bool avx2_supported() {
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}

#else

bool avx2_supported() { return false; }

#endif

namespace {

Impl initial_impl() {
    if (const char* env = std::getenv("JONES_KERNEL")) {
        if (std::strcmp(env, "scalar") == 0) return Impl::scalar;
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return Impl::avx2;
    }
    return avx2_supported() ? Impl::avx2 : Impl::scalar;
}

Impl& impl_slot() {
    static Impl impl = initial_impl();
    return impl;
}

} // namespace

Impl active() { return impl_slot(); }

void set_impl(Impl impl) {
    if (impl == Impl::avx2 && !avx2_supported())
        throw std::invalid_argument("avx2 kernels not supported on this CPU");
    impl_slot() = impl;
}

const char* impl_name(Impl impl) { return impl == Impl::avx2 ? "avx2" : "scalar"; }

void gemm(const std::complex<double>* A, const std::complex<double>* B, std::complex<double>* C,
          std::size_t n, std::size_t m, std::size_t p) {
#if defined(__x86_64__) || defined(_M_X64)
    if (active() == Impl::avx2) {
        gemm_avx2(A, B, C, n, m, p);
        return;
    }
#endif
    gemm_scalar(A, B, C, n, m, p);
}

} // namespace jones::kernels
