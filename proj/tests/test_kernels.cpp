#include "doctest.h"

#include <cstring>
#include <vector>

#include "ids/kernels.hpp"
#include "ids/rng.hpp"

using namespace ids;

namespace {

std::vector<std::uint64_t> random_words(SplitMix64& rng, std::size_t n) {
    std::vector<std::uint64_t> w(n);
    for (auto& x : w) x = rng.next();
    return w;
}

} // namespace

TEST_CASE("scalar kernel semantics") {
    const auto& ops = kernels::ops_for(kernels::Backend::scalar);
    CHECK(std::strcmp(ops.name, "scalar") == 0);

    std::uint64_t a[3] = {0b1100, 0b1010, ~0ull};
    std::uint64_t b[3] = {0b1010, 0b1010, 0};

    std::uint64_t t[3];
    std::memcpy(t, a, sizeof a);
    ops.bit_or(t, b, 3);
    CHECK(t[0] == 0b1110);
    CHECK(t[2] == ~0ull);

    std::memcpy(t, a, sizeof a);
    ops.bit_and(t, b, 3);
    CHECK(t[0] == 0b1000);
    CHECK(t[2] == 0);

    std::memcpy(t, a, sizeof a);
    ops.bit_andnot(t, b, 3);
    CHECK(t[0] == 0b0100);
    CHECK(t[1] == 0);
    CHECK(t[2] == ~0ull);

    CHECK(ops.popcount(a, 3) == 2 + 2 + 64);
    std::uint64_t s[3] = {0b1000, 0b0010, 0};
    CHECK(ops.is_subset(s, a, 3));
    CHECK_FALSE(ops.is_subset(a, s, 3));
    CHECK_FALSE(ops.is_subset(b, a, 3));  // b[0] has bit 1, a[0] does not
    CHECK(ops.equals(a, a, 3));
    CHECK_FALSE(ops.equals(a, b, 3));
    CHECK(ops.any(a, 3));
    std::uint64_t z[2] = {0, 0};
    CHECK_FALSE(ops.any(z, 2));

    // zero-length inputs are legal everywhere
    CHECK(ops.popcount(a, 0) == 0);
    CHECK(ops.is_subset(a, b, 0));
    CHECK(ops.equals(a, b, 0));
    CHECK_FALSE(ops.any(a, 0));
}

TEST_CASE("avx2 kernels match scalar bit for bit") {
    if (!kernels::backend_supported(kernels::Backend::avx2)) {
        MESSAGE("avx2 not supported on this cpu; skipping equivalence sweep");
        return;
    }
    const auto& sc = kernels::ops_for(kernels::Backend::scalar);
    const auto& vx = kernels::ops_for(kernels::Backend::avx2);
    CHECK(std::strcmp(vx.name, "avx2") == 0);

    SplitMix64 rng(7);
    // word counts straddle the 4-word vector width, including remainders
    for (std::size_t n : {0, 1, 2, 3, 4, 5, 7, 8, 9, 16, 33, 100}) {
        for (int rep = 0; rep < 20; ++rep) {
            auto a = random_words(rng, n);
            auto b = random_words(rng, n);
            if (rep % 5 == 0 && n > 0) b = a;  // exercise equal/subset fast paths
            if (rep % 7 == 0)
                for (auto& x : b) x = 0;

            auto t1 = a, t2 = a;
            sc.bit_or(t1.data(), b.data(), n);
            vx.bit_or(t2.data(), b.data(), n);
            CHECK(t1 == t2);

            t1 = a; t2 = a;
            sc.bit_and(t1.data(), b.data(), n);
            vx.bit_and(t2.data(), b.data(), n);
            CHECK(t1 == t2);

            t1 = a; t2 = a;
            sc.bit_andnot(t1.data(), b.data(), n);
            vx.bit_andnot(t2.data(), b.data(), n);
            CHECK(t1 == t2);

            CHECK(sc.popcount(a.data(), n) == vx.popcount(a.data(), n));
            CHECK(sc.is_subset(a.data(), b.data(), n) == vx.is_subset(a.data(), b.data(), n));
            CHECK(sc.equals(a.data(), b.data(), n) == vx.equals(a.data(), b.data(), n));
            CHECK(sc.any(a.data(), n) == vx.any(a.data(), n));
        }
    }
}

TEST_CASE("backend switching") {
    kernels::Backend before = kernels::active_backend();
    CHECK(kernels::backend_supported(kernels::Backend::scalar));
    CHECK(kernels::set_backend(kernels::Backend::scalar));
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    CHECK(std::strcmp(kernels::active().name, "scalar") == 0);
    if (kernels::backend_supported(kernels::Backend::avx2)) {
        CHECK(kernels::set_backend(kernels::Backend::avx2));
        CHECK(kernels::active_backend() == kernels::Backend::avx2);
    }
    kernels::set_backend(before);
}
