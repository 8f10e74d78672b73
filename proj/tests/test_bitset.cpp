#include "doctest.h"

#include <set>
#include <vector>

#include "ids/bitset.hpp"
#include "ids/rng.hpp"

using namespace ids;

namespace {

std::set<int> random_set(SplitMix64& rng, int nbits, int target) {
    std::set<int> s;
    for (int i = 0; i < target; ++i) s.insert(static_cast<int>(rng.next_below(nbits)));
    return s;
}

DynBitset from_set(std::size_t nbits, const std::set<int>& s) {
    DynBitset b(nbits);
    for (int i : s) b.set(i);
    return b;
}

} // namespace

TEST_CASE("basic bit operations") {
    DynBitset b(10);
    CHECK(b.size() == 10);
    CHECK(b.none());
    b.set(0);
    b.set(9);
    CHECK(b.test(0));
    CHECK(b.test(9));
    CHECK_FALSE(b.test(5));
    CHECK(b.count() == 2);
    CHECK(b.any());
    b.reset(0);
    CHECK(b.count() == 1);
    b.clear();
    CHECK(b.none());
}

TEST_CASE("fill keeps bits past size zero") {
    for (std::size_t n : {0u, 1u, 63u, 64u, 65u, 70u, 128u, 129u}) {
        DynBitset b(n);
        b.fill();
        CHECK(b.count() == n);
        auto idx = b.to_indices();
        CHECK(idx.size() == n);
        if (n) {
            CHECK(idx.front() == 0);
            CHECK(idx.back() == static_cast<int>(n) - 1);
        }
        // full-word invariant survives the algebra
        DynBitset c(n);
        c |= b;
        CHECK(c.count() == n);
        c.andnot(b);
        CHECK(c.none());
    }
}

TEST_CASE("full and from_indices factories") {
    auto f = DynBitset::full(70);
    CHECK(f.count() == 70);
    std::vector<int> idx = {0, 3, 69};
    auto s = DynBitset::from_indices(70, idx);
    CHECK(s.count() == 3);
    CHECK(s.is_subset_of(f));
    CHECK(s.to_indices() == idx);
}

TEST_CASE("set algebra agrees with std::set reference") {
    SplitMix64 rng(11);
    for (int nbits : {1, 17, 64, 65, 200}) {
        for (int rep = 0; rep < 30; ++rep) {
            auto sa = random_set(rng, nbits, nbits / 2 + 1);
            auto sb = random_set(rng, nbits, nbits / 3 + 1);
            auto a = from_set(nbits, sa), b = from_set(nbits, sb);

            std::set<int> u = sa;
            u.insert(sb.begin(), sb.end());
            auto t = a;
            t |= b;
            CHECK(t.to_indices() == std::vector<int>(u.begin(), u.end()));

            std::set<int> in;
            for (int x : sa)
                if (sb.count(x)) in.insert(x);
            t = a;
            t &= b;
            CHECK(t.to_indices() == std::vector<int>(in.begin(), in.end()));

            std::set<int> diff;
            for (int x : sa)
                if (!sb.count(x)) diff.insert(x);
            t = a;
            t.andnot(b);
            CHECK(t.to_indices() == std::vector<int>(diff.begin(), diff.end()));

            CHECK(a.is_subset_of(a));
            CHECK(t.is_subset_of(a));
            bool sub = true;
            for (int x : sa)
                if (!sb.count(x)) sub = false;
            CHECK(a.is_subset_of(b) == sub);
            CHECK((a == b) == (sa == sb));
            CHECK(a.count() == sa.size());
        }
    }
}

TEST_CASE("iteration order is ascending") {
    SplitMix64 rng(3);
    auto s = random_set(rng, 150, 40);
    auto b = from_set(150, s);
    std::vector<int> seen;
    b.for_each([&](int i) { seen.push_back(i); });
    CHECK(seen == std::vector<int>(s.begin(), s.end()));

    std::vector<int> scanned;
    for (int i = b.find_first(); i != -1; i = b.find_next(i)) scanned.push_back(i);
    CHECK(scanned == seen);
    CHECK(DynBitset(64).find_first() == -1);
}
