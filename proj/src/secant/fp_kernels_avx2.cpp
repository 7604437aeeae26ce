// AVX2 variants of the F_p row kernels. Compiled with -mavx2 in this TU only;
// callers go through the runtime dispatch in fp_kernels.cpp.
#include "secant/fp_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

namespace secant::fp {

namespace {

// Shoup modular multiplication by a fixed m: with w = floor(m * 2^64 / p) and
// q = floor(w * y / 2^64), the value m*y - q*p lies in [0, 2p). All operands
// are < 2^31, so every 32x32 partial product below is exact in a 64-bit lane.
inline std::uint64_t shoup_w(std::uint64_t m, std::uint64_t p) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(m) << 64) / p);
}

// conditional subtract: v >= p ? v - p : v   (lanes are < 2^33, signed-safe)
inline __m256i csub(__m256i v, __m256i vp) {
    __m256i lt = _mm256_cmpgt_epi64(vp, v);
    return _mm256_sub_epi64(v, _mm256_andnot_si256(lt, vp));
}

// floor(w * y / 2^64) for y < 2^32, via w = w_hi*2^32 + w_lo:
//   q = (w_hi*y + ((w_lo*y) >> 32)) >> 32
inline __m256i mulhi_w(__m256i y, __m256i w_lo, __m256i w_hi) {
    __m256i b = _mm256_mul_epu32(w_lo, y);
    __m256i a = _mm256_mul_epu32(w_hi, y);
    return _mm256_srli_epi64(
        _mm256_add_epi64(a, _mm256_srli_epi64(b, 32)), 32);
}

void axpy_avx2(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
               std::uint64_t m, std::uint64_t p) {
    if (m == 0) return;
    const std::uint64_t w = shoup_w(m, p);
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
    const __m256i w_lo = _mm256_set1_epi64x(static_cast<long long>(w & 0xffffffffULL));
    const __m256i w_hi = _mm256_set1_epi64x(static_cast<long long>(w >> 32));

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i x = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i q = mulhi_w(y, w_lo, w_hi);
        __m256i prod = _mm256_mul_epu32(vm, y);
        __m256i qp = _mm256_mul_epu32(q, vp);
        __m256i r = csub(_mm256_sub_epi64(prod, qp), vp);
        __m256i t = csub(_mm256_add_epi64(x, r), vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) dst[i] = (dst[i] + m * src[i]) % p;
}

void scale_avx2(std::uint64_t* dst, std::size_t n, std::uint64_t m,
                std::uint64_t p) {
    const std::uint64_t w = shoup_w(m % p, p);
    const std::uint64_t mm = m % p;
    const __m256i vp = _mm256_set1_epi64x(static_cast<long long>(p));
    const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(mm));
    const __m256i w_lo = _mm256_set1_epi64x(static_cast<long long>(w & 0xffffffffULL));
    const __m256i w_hi = _mm256_set1_epi64x(static_cast<long long>(w >> 32));

    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i y = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
        __m256i q = mulhi_w(y, w_lo, w_hi);
        __m256i prod = _mm256_mul_epu32(vm, y);
        __m256i qp = _mm256_mul_epu32(q, vp);
        __m256i r = csub(_mm256_sub_epi64(prod, qp), vp);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), r);
    }
    for (; i < n; ++i) dst[i] = dst[i] * mm % p;
}

const KernelTable kAvx2 = {axpy_avx2, scale_avx2, "avx2"};

} // namespace

const KernelTable* avx2_kernels() {
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &kAvx2 : nullptr;
}

} // namespace secant::fp

#else

namespace secant::fp {
const KernelTable* avx2_kernels() { return nullptr; }
} // namespace secant::fp

#endif
