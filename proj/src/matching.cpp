#include "ids/matching.hpp"

#include <limits>

namespace ids {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

// Hopcroft-Karp restricted to x_mask/y_mask. Scratch arrays are sized by the
// full graph and indexed by original vertex ids; only masked entries are
// touched. All scans run in ascending index order.
class HopcroftKarp {
public:
    HopcroftKarp(const BipartiteGraph& g, const DynBitset& x_mask, const DynBitset& y_mask)
        : g_(g),
          y_mask_(y_mask),
          x_list_(x_mask.to_indices()),
          pair_l_(static_cast<std::size_t>(g.n_left), -1),
          pair_r_(static_cast<std::size_t>(g.n_right), -1),
          dist_(static_cast<std::size_t>(g.n_left), kInf) {}

    int solve() {
        int matched = 0;
        while (bfs()) {
            for (int u : x_list_)
                if (pair_l_[static_cast<std::size_t>(u)] < 0 && dfs(u)) ++matched;
        }
        return matched;
    }

    // Left vertices with finite distance after the final (failed) BFS are
    // exactly those reachable from unmatched X-vertices by alternating paths.
    std::vector<int> alternating_reachable() const {
        std::vector<int> out;
        for (int u : x_list_)
            if (dist_[static_cast<std::size_t>(u)] != kInf) out.push_back(u);
        return out;
    }

    std::vector<std::pair<int, int>> pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int u : x_list_)
            if (int r = pair_l_[static_cast<std::size_t>(u)]; r >= 0) out.emplace_back(u, r);
        return out;
    }

private:
    bool bfs() {
        queue_.clear();
        for (int u : x_list_) {
            auto ui = static_cast<std::size_t>(u);
            if (pair_l_[ui] < 0) {
                dist_[ui] = 0;
                queue_.push_back(u);
            } else {
                dist_[ui] = kInf;
            }
        }
        bool reached_free = false;
        for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
            int u = queue_[qi];
            int du = dist_[static_cast<std::size_t>(u)];
            const std::uint64_t* row = g_.left_rows[static_cast<std::size_t>(u)].words();
            const std::uint64_t* ym = y_mask_.words();
            for (std::size_t wi = 0; wi < y_mask_.word_count(); ++wi) {
                std::uint64_t w = row[wi] & ym[wi];
                while (w) {
                    int r = static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                    w &= w - 1;
                    int m = pair_r_[static_cast<std::size_t>(r)];
                    if (m < 0) {
                        reached_free = true;
                    } else if (dist_[static_cast<std::size_t>(m)] == kInf) {
                        dist_[static_cast<std::size_t>(m)] = du + 1;
                        queue_.push_back(m);
                    }
                }
            }
        }
        return reached_free;
    }

    bool dfs(int u) {
        int du = dist_[static_cast<std::size_t>(u)];
        const std::uint64_t* row = g_.left_rows[static_cast<std::size_t>(u)].words();
        const std::uint64_t* ym = y_mask_.words();
        for (std::size_t wi = 0; wi < y_mask_.word_count(); ++wi) {
            std::uint64_t w = row[wi] & ym[wi];
            while (w) {
                int r = static_cast<int>((wi << 6) + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
                int m = pair_r_[static_cast<std::size_t>(r)];
                if (m < 0 || (dist_[static_cast<std::size_t>(m)] == du + 1 && dfs(m))) {
                    pair_l_[static_cast<std::size_t>(u)] = r;
                    pair_r_[static_cast<std::size_t>(r)] = u;
                    return true;
                }
            }
        }
        dist_[static_cast<std::size_t>(u)] = kInf;
        return false;
    }

    const BipartiteGraph& g_;
    const DynBitset& y_mask_;
    std::vector<int> x_list_;
    std::vector<int> pair_l_, pair_r_, dist_;
    std::vector<int> queue_;
};

} // namespace

MatchingResult max_matching_masks(const BipartiteGraph& g, const DynBitset& x_mask,
                                  const DynBitset& y_mask, bool want_certificate) {
    HopcroftKarp hk(g, x_mask, y_mask);
    MatchingResult res;
    res.size = hk.solve();
    if (static_cast<std::size_t>(res.size) < x_mask.count() && want_certificate)
        res.violator = hk.alternating_reachable();
    res.pairs = hk.pairs();
    return res;
}

MatchingResult max_matching(const BipartiteGraph& g, std::span<const int> x,
                            std::span<const int> y) {
    detail::check_left_subset(g, x, "max_matching");
    detail::check_right_subset(g, y, "max_matching");
    DynBitset xm = DynBitset::from_indices(static_cast<std::size_t>(g.n_left), x);
    DynBitset ym = DynBitset::from_indices(static_cast<std::size_t>(g.n_right), y);
    return max_matching_masks(g, xm, ym);
}

bool has_saturating_matching(const BipartiteGraph& g, std::span<const int> x,
                             std::span<const int> y) {
    detail::check_left_subset(g, x, "has_saturating_matching");
    detail::check_right_subset(g, y, "has_saturating_matching");
    DynBitset xm = DynBitset::from_indices(static_cast<std::size_t>(g.n_left), x);
    DynBitset ym = DynBitset::from_indices(static_cast<std::size_t>(g.n_right), y);
    return static_cast<std::size_t>(max_matching_masks(g, xm, ym, false).size) == xm.count();
}

} // namespace ids
