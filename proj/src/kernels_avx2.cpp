// AVX2 variants of the word kernels. This translation unit is the only one
// built with -mavx2; callers reach it through the dispatch table, never
// directly, so running on a non-AVX2 CPU is safe as long as the dispatcher
// checked cpuid first.

#include "ids/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)

#include <immintrin.h>

#include <bit>

namespace ids::kernels {

namespace {

inline __m256i load(const std::uint64_t* p) {
    return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(std::uint64_t* p, __m256i v) {
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void avx2_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] |= src[i];
}

void avx2_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
    for (; i < n; ++i) dst[i] &= src[i];
}

void avx2_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    std::size_t i = 0;
    // _mm256_andnot_si256(a, b) computes ~a & b, so src goes first.
    for (; i + 4 <= n; i += 4) store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
    for (; i < n; ++i) dst[i] &= ~src[i];
}

std::uint64_t avx2_popcount(const std::uint64_t* w, std::size_t n) {
    // Scalar popcnt on 4x unrolled words beats a vectorized Harley-Seal at
    // the word counts this project sees (tens of words per row).
    std::uint64_t c0 = 0, c1 = 0, c2 = 0, c3 = 0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        c0 += static_cast<std::uint64_t>(std::popcount(w[i]));
        c1 += static_cast<std::uint64_t>(std::popcount(w[i + 1]));
        c2 += static_cast<std::uint64_t>(std::popcount(w[i + 2]));
        c3 += static_cast<std::uint64_t>(std::popcount(w[i + 3]));
    }
    for (; i < n; ++i) c0 += static_cast<std::uint64_t>(std::popcount(w[i]));
    return c0 + c1 + c2 + c3;
}

bool avx2_is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i stray = _mm256_andnot_si256(load(b + i), load(a + i));
        if (!_mm256_testz_si256(stray, stray)) return false;
    }
    for (; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool avx2_equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
        if (!_mm256_testz_si256(diff, diff)) return false;
    }
    for (; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool avx2_any(const std::uint64_t* w, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = load(w + i);
        if (!_mm256_testz_si256(v, v)) return true;
    }
    for (; i < n; ++i)
        if (w[i]) return true;
    return false;
}

} // namespace

// extern: const alone would give this internal linkage.
extern const Ops kAvx2Ops;
const Ops kAvx2Ops = {
    avx2_or,   avx2_and,    avx2_andnot, avx2_popcount,
    avx2_is_subset, avx2_equals, avx2_any, "avx2",
};

} // namespace ids::kernels

#endif // x86
