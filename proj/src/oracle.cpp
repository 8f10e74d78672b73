#include "ids/oracle.hpp"

#include <string>

#include "ids/errors.hpp"

namespace ids::oracle {

namespace {

bool try_augment(int u, const std::vector<std::vector<int>>& adj, const std::vector<char>& right_ok,
                 std::vector<char>& visited, std::vector<int>& match_r) {
    for (int r : adj[u]) {
        if (!right_ok[r] || visited[r]) continue;
        visited[r] = 1;
        if (match_r[r] < 0 || try_augment(match_r[r], adj, right_ok, visited, match_r)) {
            match_r[r] = u;
            return true;
        }
    }
    return false;
}

void check_guard(const BipartiteGraph& g, int limit, const char* where) {
    if (g.n_left > limit)
        throw GuardError(std::string(where) + ": |L| = " + std::to_string(g.n_left) +
                         " exceeds the guard " + std::to_string(limit) +
                         "; pass a larger limit explicitly to enumerate 2^" +
                         std::to_string(g.n_left) + " subsets");
}

// Lexicographic successor of a size-s index combination over 0..n-1.
bool next_combination(std::vector<int>& idx, int n) {
    int s = static_cast<int>(idx.size());
    for (int i = s - 1; i >= 0; --i) {
        if (idx[i] < n - s + i) {
            ++idx[i];
            for (int t = i + 1; t < s; ++t) idx[t] = idx[t - 1] + 1;
            return true;
        }
    }
    return false;
}

template <typename F>
void for_each_subset_by_size(int n, F&& visit) {
    for (int s = 0; s <= n; ++s) {
        std::vector<int> idx(s);
        for (int i = 0; i < s; ++i) idx[i] = i;
        if (s == 0) {
            if (!visit(idx)) return;
            continue;
        }
        do {
            if (!visit(idx)) return;
        } while (next_combination(idx, n));
    }
}

} // namespace

bool is_identifiable_bruteforce(const BipartiteGraph& g, const std::vector<int>& j) {
    std::vector<char> in_j(g.n_left, 0);
    for (int u : j) in_j[u] = 1;

    // R side of G(j): rights whose every neighbor lies in j.
    std::vector<char> right_ok(g.n_right, 1);
    for (int r = 0; r < g.n_right; ++r)
        for (int u : g.adj_right[r])
            if (!in_j[u]) {
                right_ok[r] = 0;
                break;
            }

    long long edges = 0;
    for (int u : j)
        for (int r : g.adj_left[u])
            if (right_ok[r]) ++edges;
    if (edges == 0) return false;

    std::vector<char> allowed(g.n_right);
    std::vector<int> match_r(g.n_right);
    std::vector<char> visited(g.n_right);
    for (int v : j) {
        allowed = right_ok;
        for (int r : g.adj_left[v]) allowed[r] = 0;
        std::fill(match_r.begin(), match_r.end(), -1);
        int matched = 0;
        for (int u : j) {
            if (u == v) continue;
            std::fill(visited.begin(), visited.end(), 0);
            if (try_augment(u, g.adj_left, allowed, visited, match_r)) ++matched;
        }
        if (matched < static_cast<int>(j.size()) - 1) return false;
    }
    return true;
}

EnumerationResult enumerate_identifiable(const BipartiteGraph& g, int limit) {
    check_guard(g, limit, "enumerate_identifiable");
    EnumerationResult out;
    for_each_subset_by_size(g.n_left, [&](const std::vector<int>& j) {
        if (is_identifiable_bruteforce(g, j)) {
            if (!out.min_size) out.min_size = static_cast<int>(j.size());
            if (out.max_set && out.max_set->size() == j.size()) out.max_unique = false;
            if (!out.max_set || j.size() > out.max_set->size()) {
                out.max_set = j;
                out.max_unique = true;
            }
            out.identifiable_sets.push_back(j);
        }
        return true;
    });
    return out;
}

std::optional<std::vector<int>> solve_min_ids_exact(const BipartiteGraph& g, int k, int limit) {
    check_guard(g, limit, "solve_min_ids_exact");
    std::optional<std::vector<int>> found;
    for_each_subset_by_size(g.n_left, [&](const std::vector<int>& j) {
        if (static_cast<int>(j.size()) > k) return false;  // sizes ascend; nothing further fits
        if (!j.empty() && is_identifiable_bruteforce(g, j)) {
            found = j;
            return false;  // first hit is minimum-size, lexicographically first
        }
        return true;
    });
    return found;
}

} // namespace ids::oracle
