#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace secant::fp {

/// Inner-loop kernels for F_p row operations, p < 2^31, all values in [0, p).
/// These carry the O(n^3) cost of every mod-p rank computation, so they come
/// in a scalar reference flavor and an AVX2 flavor selected at runtime.
struct KernelTable {
    /// dst[i] = (dst[i] + m * src[i]) mod p
    void (*axpy)(std::uint64_t* dst, const std::uint64_t* src, std::size_t n,
                 std::uint64_t m, std::uint64_t p);
    /// dst[i] = (dst[i] * m) mod p
    void (*scale)(std::uint64_t* dst, std::size_t n, std::uint64_t m,
                  std::uint64_t p);
    const char* name;
};

const KernelTable& scalar_kernels();

/// AVX2 kernels, or nullptr when unsupported (not compiled in, or the CPU
/// lacks AVX2).
const KernelTable* avx2_kernels();

/// Active table: best available, honoring SECANT_FP_KERNEL=scalar|avx2.
const KernelTable& active();

/// Force a kernel by name ("auto", "scalar", "avx2"). Throws
/// std::invalid_argument when the request cannot be satisfied.
void select(std::string_view name);

} // namespace secant::fp
