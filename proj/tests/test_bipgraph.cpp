#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ids/bipgraph.hpp"
#include "ids/errors.hpp"
#include "ids/reductions.hpp"
#include "ids/rng.hpp"

using namespace ids;

namespace {

using Edges = std::vector<std::pair<int, int>>;

// the running 3x2 example: 1-r1, 2-r2, 3-r2 (0-based here)
BipartiteGraph g32() { return build(3, 2, Edges{{0, 0}, {1, 1}, {2, 1}}); }

// right side of G(j) computed the slow way, straight from the definition
std::vector<int> naive_rset(const BipartiteGraph& g, const std::set<int>& j) {
    std::vector<int> out;
    for (int r = 0; r < g.n_right; ++r) {
        bool ok = true;
        for (int l : g.adj_right[r])
            if (!j.count(l)) ok = false;
        if (ok) out.push_back(r);
    }
    return out;
}

} // namespace

TEST_CASE("build basics") {
    auto g = build(2, 2, Edges{{0, 0}, {1, 1}});
    CHECK(g.edge_count == 2);
    CHECK(g.degree(Side::left, 0) == 1);

    CHECK(build(1, 1, Edges{}).edge_count == 0);
    CHECK(build(2, 2, Edges{{0, 0}, {0, 0}, {1, 1}}).edge_count == 2);

    CHECK_THROWS_AS(build(2, 2, Edges{{0, 2}}), InputError);
    CHECK_THROWS_WITH_AS(build(2, 2, Edges{{2, 0}}),
                         doctest::Contains("(2, 0)"), InputError);
}

TEST_CASE("adjacency is mutually consistent and sorted") {
    auto g = gen_random_bipartite(13, 9, 0.4, 5);
    long long total = 0;
    for (int l = 0; l < g.n_left; ++l) {
        CHECK(std::is_sorted(g.adj_left[l].begin(), g.adj_left[l].end()));
        CHECK(std::adjacent_find(g.adj_left[l].begin(), g.adj_left[l].end()) ==
              g.adj_left[l].end());
        total += static_cast<long long>(g.adj_left[l].size());
        for (int r : g.adj_left[l]) {
            CHECK(std::binary_search(g.adj_right[r].begin(), g.adj_right[r].end(), l));
            CHECK(g.left_rows[l].test(r));
            CHECK(g.right_rows[r].test(l));
        }
    }
    CHECK(total == g.edge_count);
    long long total_r = 0;
    for (int r = 0; r < g.n_right; ++r) total_r += static_cast<long long>(g.adj_right[r].size());
    CHECK(total_r == g.edge_count);
}

TEST_CASE("neighborhood") {
    auto k22 = build(2, 2, Edges{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    CHECK(neighborhood(k22, Side::left, std::vector<int>{0}) == std::vector<int>{0, 1});
    CHECK(neighborhood(k22, Side::left, std::vector<int>{}).empty());
    auto pm = build(2, 2, Edges{{0, 0}, {1, 1}});
    CHECK(neighborhood(pm, Side::left, std::vector<int>{0, 1}) == std::vector<int>{0, 1});
    CHECK(neighborhood(g32(), Side::right, std::vector<int>{1}) == std::vector<int>{1, 2});
    CHECK_THROWS_AS(neighborhood(pm, Side::left, std::vector<int>{2}), InputError);
}

TEST_CASE("induce_lsubgraph matches the definition") {
    // u-a, u-b, v-b: excluding v kills b
    auto g = build(2, 2, Edges{{0, 0}, {0, 1}, {1, 1}});
    auto s = induce_lsubgraph(g, std::vector<int>{0});
    CHECK(s.j_set == std::vector<int>{0});
    CHECK(s.r_set == std::vector<int>{0});

    auto full = induce_lsubgraph(g, std::vector<int>{0, 1});
    CHECK(full.r_set == std::vector<int>{0, 1});

    auto s2 = induce_lsubgraph(g32(), std::vector<int>{0});
    CHECK(s2.r_set == std::vector<int>{0});

    // isolated R-vertices survive every induction, including j = {}
    auto iso = build(2, 3, Edges{{0, 0}, {1, 1}});
    CHECK(induce_lsubgraph(iso, std::vector<int>{}).r_set == std::vector<int>{2});
    CHECK(induce_lsubgraph(iso, std::vector<int>{0, 1}).r_set == std::vector<int>{0, 1, 2});
}

TEST_CASE("induction round-trip and monotonicity, exhaustive small graphs") {
    SplitMix64 seeds(99);
    for (int rep = 0; rep < 40; ++rep) {
        int nl = 1 + static_cast<int>(seeds.next_below(6));
        int nr = 1 + static_cast<int>(seeds.next_below(6));
        auto g = gen_random_bipartite(nl, nr, 0.4, seeds.next());
        std::vector<std::vector<int>> rsets(1u << nl);
        for (unsigned mask = 0; mask < (1u << nl); ++mask) {
            std::set<int> j;
            std::vector<int> jv;
            for (int i = 0; i < nl; ++i)
                if (mask >> i & 1) {
                    j.insert(i);
                    jv.push_back(i);
                }
            auto s = induce_lsubgraph(g, jv);
            CHECK(s.r_set == naive_rset(g, j));
            rsets[mask] = s.r_set;
        }
        // j1 subset of j2 => r_set(j1) subset of r_set(j2)
        for (unsigned m2 = 0; m2 < (1u << nl); ++m2) {
            unsigned m1 = m2 ? (m2 - 1) & m2 : 0;  // one proper subset per mask
            CHECK(std::includes(rsets[m2].begin(), rsets[m2].end(), rsets[m1].begin(),
                                rsets[m1].end()));
        }
    }
}

TEST_CASE("deleting N[K] preserves inductions that avoid K") {
    SplitMix64 seeds(123);
    for (int rep = 0; rep < 30; ++rep) {
        int nl = 2 + static_cast<int>(seeds.next_below(5));
        int nr = 1 + static_cast<int>(seeds.next_below(6));
        auto g = gen_random_bipartite(nl, nr, 0.4, seeds.next());
        unsigned kmask = static_cast<unsigned>(seeds.next_below(1u << nl));

        std::vector<int> kv, keep_l;
        for (int i = 0; i < nl; ++i) (kmask >> i & 1 ? kv : keep_l).push_back(i);
        auto nk = neighborhood(g, Side::left, kv);
        std::set<int> nks(nk.begin(), nk.end());
        std::vector<int> keep_r;
        for (int r = 0; r < nr; ++r)
            if (!nks.count(r)) keep_r.push_back(r);
        auto [h, tr] = induced_subgraph(g, keep_l, keep_r);

        // same r_set (and hence the same induced graph) for every j avoiding K
        const unsigned cmask = ~kmask & ((1u << nl) - 1);
        for (unsigned sub = 0;; sub = (sub - cmask) & cmask) {
            std::vector<int> j_orig, j_new;
            for (int i = 0; i < nl; ++i)
                if (sub >> i & 1) j_orig.push_back(i);
            for (int i = 0; i < h.n_left; ++i)
                if (sub >> tr.left_to_orig[i] & 1) j_new.push_back(i);
            auto a = induce_lsubgraph(g, j_orig);
            auto b = induce_lsubgraph(h, j_new);
            std::vector<int> b_orig;
            for (int r : b.r_set) b_orig.push_back(tr.right_to_orig[r]);
            CHECK(a.r_set == b_orig);
            if (sub == cmask) break;
        }
    }
}

TEST_CASE("induced_subgraph remaps and translates back") {
    auto g = g32();
    auto [h, tr] = induced_subgraph(g, std::vector<int>{1, 2}, std::vector<int>{1});
    CHECK(h.n_left == 2);
    CHECK(h.n_right == 1);
    CHECK(h.edge_count == 2);
    CHECK(tr.left_to_orig == std::vector<int>{1, 2});
    CHECK(tr.right_to_orig == std::vector<int>{1});
    CHECK(h.adj_left[0] == std::vector<int>{0});
    CHECK_THROWS_AS(induced_subgraph(g, std::vector<int>{3}, std::vector<int>{}), InputError);
}
