#include "secant/fp_kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace secant::fp {

namespace {

void axpy_scalar(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                 std::uint64_t m, std::uint64_t p) {
    if (m == 0) return;
    for (std::size_t i = 0; i < n; ++i) {
        // m, src[i] < p < 2^31, so the product fits well below 2^63
        dst[i] = (dst[i] + m * src[i]) % p;
    }
}

void scale_scalar(std::uint64_t* dst, std::size_t n, std::uint64_t m,
                  std::uint64_t p) {
    for (std::size_t i = 0; i < n; ++i) dst[i] = dst[i] * m % p;
}

const KernelTable kScalar = {axpy_scalar, scale_scalar, "scalar"};

std::atomic<const KernelTable*> g_active{nullptr};

const KernelTable* pick_default() {
    if (const char* env = std::getenv("SECANT_FP_KERNEL")) {
        std::string_view want(env);
        if (want == "scalar") return &kScalar;
        if (want == "avx2" && avx2_kernels()) return avx2_kernels();
        // unknown or unavailable: fall through to auto
    }
    if (const KernelTable* t = avx2_kernels()) return t;
    return &kScalar;
}

} // namespace

const KernelTable& scalar_kernels() { return kScalar; }

#if !defined(SECANT_AVX2_TU)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

const KernelTable& active() {
    const KernelTable* t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = pick_default();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

void select(std::string_view name) {
    if (name == "auto") {
        g_active.store(pick_default(), std::memory_order_release);
        return;
    }
    if (name == "scalar") {
        g_active.store(&kScalar, std::memory_order_release);
        return;
    }
    if (name == "avx2") {
        if (const KernelTable* t = avx2_kernels()) {
            g_active.store(t, std::memory_order_release);
            return;
        }
        throw std::invalid_argument("fp::select: avx2 kernels unavailable");
    }
    throw std::invalid_argument("fp::select: unknown kernel '" +
                                std::string(name) + "'");
}

} // namespace secant::fp
