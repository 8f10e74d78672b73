#pragma once

#include <cstddef>
#include <cstdint>

// Word-level set-algebra kernels. Everything upstream (neighborhood unions,
// complement masks, subset tests) bottoms out in these loops over uint64
// words, so they exist once as a scalar reference and once per SIMD ISA,
// selected at runtime. The variants must be bit-for-bit interchangeable;
// tests/test_kernels.cpp cross-checks every backend against the scalar one.

namespace ids::kernels {

struct Ops {
    void (*bit_or)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    void (*bit_and)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
    std::uint64_t (*popcount)(const std::uint64_t* w, std::size_t nwords);
    // a & ~b == 0, i.e. a is a subset of b.
    bool (*is_subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    bool (*equals)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
    bool (*any)(const std::uint64_t* w, std::size_t nwords);
    const char* name;
};

enum class Backend { scalar, avx2 };

// The active table. First call picks the best supported backend, unless the
// environment variable IDS_KERNELS (values: "scalar", "avx2") says otherwise.
const Ops& active();
Backend active_backend();

bool backend_supported(Backend b);
// Switch the active backend; returns false (and leaves it unchanged) if the
// CPU lacks support. Not meant to be called concurrently with kernel use.
bool set_backend(Backend b);

// Direct access for equivalence tests.
const Ops& ops_for(Backend b);

} // namespace ids::kernels
