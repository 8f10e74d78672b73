#include "ids/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>

namespace ids::kernels {

namespace {

void scalar_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void scalar_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void scalar_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

std::uint64_t scalar_popcount(const std::uint64_t* w, std::size_t n) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::uint64_t>(std::popcount(w[i]));
    return c;
}

bool scalar_is_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

bool scalar_equals(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return false;
    return true;
}

bool scalar_any(const std::uint64_t* w, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (w[i]) return true;
    return false;
}

constexpr Ops kScalarOps = {
    scalar_or,   scalar_and,    scalar_andnot, scalar_popcount,
    scalar_is_subset, scalar_equals, scalar_any, "scalar",
};

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<const Ops*> g_active{nullptr};

const Ops* pick_initial() {
    Backend want = backend_supported(Backend::avx2) ? Backend::avx2 : Backend::scalar;
    if (const char* env = std::getenv("IDS_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) want = Backend::scalar;
        else if (std::strcmp(env, "avx2") == 0 && backend_supported(Backend::avx2))
            want = Backend::avx2;
    }
    return &ops_for(want);
}

} // namespace

#if defined(__x86_64__) || defined(__i386__)
// Defined in kernels_avx2.cpp (compiled with -mavx2).
extern const Ops kAvx2Ops;
#endif

const Ops& ops_for(Backend b) {
#if defined(__x86_64__) || defined(__i386__)
    if (b == Backend::avx2) return kAvx2Ops;
#endif
    (void)b;
    return kScalarOps;
}

bool backend_supported(Backend b) {
    switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2: return cpu_has_avx2();
    }
    return false;
}

const Ops& active() {
    const Ops* ops = g_active.load(std::memory_order_acquire);
    if (!ops) {
        ops = pick_initial();
        g_active.store(ops, std::memory_order_release);
    }
    return *ops;
}

Backend active_backend() {
    return &active() == &kScalarOps ? Backend::scalar : Backend::avx2;
}

bool set_backend(Backend b) {
    if (!backend_supported(b)) return false;
    g_active.store(&ops_for(b), std::memory_order_release);
    return true;
}

} // namespace ids::kernels
