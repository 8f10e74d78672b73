#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "ids/errors.hpp"
#include "ids/matching.hpp"
#include "ids/reductions.hpp"
#include "ids/rng.hpp"

using namespace ids;

namespace {

using Edges = std::vector<std::pair<int, int>>;

BipartiteGraph g32() { return build(3, 2, Edges{{0, 0}, {1, 1}, {2, 1}}); }

// exponential reference: maximize over "leave x unmatched or match it to any
// free allowed neighbor"; fine for the <=6x6 graphs it sees
int brute_max(const BipartiteGraph& g, const std::vector<int>& x, const std::set<int>& y,
              std::size_t i, std::set<int>& used) {
    if (i == x.size()) return 0;
    int best = brute_max(g, x, y, i + 1, used);  // skip x[i]
    for (int r : g.adj_left[x[i]]) {
        if (!y.count(r) || used.count(r)) continue;
        used.insert(r);
        best = std::max(best, 1 + brute_max(g, x, y, i + 1, used));
        used.erase(r);
    }
    return best;
}

int brute_max(const BipartiteGraph& g, const std::vector<int>& x, const std::vector<int>& yv) {
    std::set<int> y(yv.begin(), yv.end()), used;
    return brute_max(g, x, y, 0, used);
}

// vertices of X reachable from unmatched X-vertices by alternating paths,
// recomputed here from the returned pairs
void alternating_reach(const BipartiteGraph& g, const std::vector<int>& x,
                       const std::vector<int>& yv, const MatchingResult& mr,
                       std::set<int>* zl, std::set<int>* zr) {
    std::set<int> y(yv.begin(), yv.end());
    std::vector<int> match_l(g.n_left, -1), match_r(g.n_right, -1);
    for (auto [l, r] : mr.pairs) {
        match_l[l] = r;
        match_r[r] = l;
    }
    std::vector<int> queue;
    for (int l : x)
        if (match_l[l] < 0) {
            zl->insert(l);
            queue.push_back(l);
        }
    while (!queue.empty()) {
        int l = queue.back();
        queue.pop_back();
        for (int r : g.adj_left[l]) {
            if (!y.count(r) || zr->count(r)) continue;
            zr->insert(r);
            int l2 = match_r[r];
            if (l2 >= 0 && !zl->count(l2)) {
                zl->insert(l2);
                queue.push_back(l2);
            }
        }
    }
}

} // namespace

TEST_CASE("max_matching examples") {
    auto k22 = build(2, 2, Edges{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    auto mr = max_matching(k22, std::vector<int>{0, 1}, std::vector<int>{0, 1});
    CHECK(mr.size == 2);
    CHECK_FALSE(mr.violator.has_value());

    mr = max_matching(g32(), std::vector<int>{1, 2}, std::vector<int>{1});
    CHECK(mr.size == 1);
    REQUIRE(mr.violator.has_value());
    CHECK(*mr.violator == std::vector<int>{1, 2});

    mr = max_matching(g32(), std::vector<int>{}, std::vector<int>{0, 1});
    CHECK(mr.size == 0);
    CHECK_FALSE(mr.violator.has_value());

    CHECK_THROWS_AS(max_matching(g32(), std::vector<int>{3}, std::vector<int>{}), InputError);
}

TEST_CASE("has_saturating_matching examples") {
    CHECK_FALSE(has_saturating_matching(g32(), std::vector<int>{1, 2}, std::vector<int>{1}));
    CHECK(has_saturating_matching(g32(), std::vector<int>{}, std::vector<int>{0, 1}));
    auto pm = build(2, 2, Edges{{0, 0}, {1, 1}});
    CHECK(has_saturating_matching(pm, std::vector<int>{1}, std::vector<int>{1}));
}

TEST_CASE("size agrees with brute force on random subsets") {
    SplitMix64 seeds(17);
    for (int rep = 0; rep < 300; ++rep) {
        int nl = 1 + static_cast<int>(seeds.next_below(6));
        int nr = 1 + static_cast<int>(seeds.next_below(6));
        auto g = gen_random_bipartite(nl, nr, 0.2 + 0.15 * static_cast<double>(rep % 5),
                                      seeds.next());
        std::vector<int> x, y;
        for (int i = 0; i < nl; ++i)
            if (seeds.next_below(3)) x.push_back(i);
        for (int r = 0; r < nr; ++r)
            if (seeds.next_below(3)) y.push_back(r);

        auto mr = max_matching(g, x, y);
        CHECK(mr.size == brute_max(g, x, y));
        CHECK(mr.size == static_cast<int>(mr.pairs.size()));
        CHECK(std::is_sorted(mr.pairs.begin(), mr.pairs.end()));
        CHECK(mr.violator.has_value() == (mr.size < static_cast<int>(x.size())));

        // matched pairs have to be real edges inside the queried subsets
        std::set<int> xs(x.begin(), x.end()), ys(y.begin(), y.end());
        std::set<int> used_l, used_r;
        for (auto [l, r] : mr.pairs) {
            CHECK(xs.count(l));
            CHECK(ys.count(r));
            CHECK(std::binary_search(g.adj_left[l].begin(), g.adj_left[l].end(), r));
            CHECK(used_l.insert(l).second);
            CHECK(used_r.insert(r).second);
        }

        if (mr.violator) {
            // certificate soundness: |N(K') cap y| < |K'|
            auto nk = neighborhood(g, Side::left, *mr.violator);
            std::vector<int> nk_in_y;
            std::set_intersection(nk.begin(), nk.end(), y.begin(), y.end(),
                                  std::back_inserter(nk_in_y));
            CHECK(nk_in_y.size() < mr.violator->size());
            // and the violator is exactly the alternating-reachable set
            std::set<int> zl, zr;
            alternating_reach(g, x, y, mr, &zl, &zr);
            CHECK(*mr.violator == std::vector<int>(zl.begin(), zl.end()));
        }

        // Koenig: (X minus Z_L) union Z_R is a vertex cover of G[x,y] with
        // |cover| = matching size
        std::set<int> zl, zr;
        alternating_reach(g, x, y, mr, &zl, &zr);
        std::size_t cover = zr.size();
        for (int l : x)
            if (!zl.count(l)) ++cover;
        CHECK(cover == static_cast<std::size_t>(mr.size));
        for (int l : x)
            for (int r : g.adj_left[l])
                if (ys.count(r)) CHECK((!zl.count(l) || zr.count(r)));
    }
}

TEST_CASE("deterministic pairs across runs") {
    auto g = gen_random_bipartite(9, 9, 0.35, 77);
    std::vector<int> x{0, 1, 2, 4, 5, 7, 8}, y{0, 2, 3, 4, 6, 8};
    auto a = max_matching(g, x, y);
    auto b = max_matching(g, x, y);
    CHECK(a.pairs == b.pairs);
    CHECK(a.size == b.size);

    DynBitset xm = DynBitset::from_indices(9, x), ym = DynBitset::from_indices(9, y);
    auto c = max_matching_masks(g, xm, ym);
    CHECK(c.pairs == a.pairs);
    CHECK(c.violator.has_value() == a.violator.has_value());
}
