#include "dsarr/lambda.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "dsarr/ds_core.hpp"
#include "dsarr/errors.hpp"

namespace dsarr::ds {

namespace {

struct SearchState {
    int n = 0;
    int s = 0;
    std::vector<int> seq;
    int used = 0;                 // canonical form: symbol k enters only after 0..k-1
    std::vector<int> alt;         // alt[x*n+y], x<y: current alternation block count
    std::vector<int> last;        // last[x*n+y]: -1 none, else x or y
    int budget_sum = 0;           // sum over pairs of (s+1 - alt)

    SearchState(int n_, int s_) : n(n_), s(s_) {
        alt.assign(static_cast<std::size_t>(n * n), 0);
        last.assign(static_cast<std::size_t>(n * n), -1);
        budget_sum = (s + 1) * n * (n - 1) / 2;
    }

    int idx(int x, int y) const { return x < y ? x * n + y : y * n + x; }

    bool legal(int x) const {
        if (!seq.empty() && seq.back() == x) return false;
        // Pairs with not-yet-introduced symbols count too: earlier blocks of x
        // are part of the (x, y) alternation once y eventually appears.
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            int i = idx(x, y);
            if (alt[static_cast<std::size_t>(i)] == s + 1 &&
                last[static_cast<std::size_t>(i)] == y) {
                return false;
            }
        }
        return true;
    }

    // Returns the list of pair indices whose alternation grew, for undo.
    void apply(int x, std::vector<int>& grew) {
        grew.clear();
        for (int y = 0; y < n; ++y) {
            if (y == x) continue;
            int i = idx(x, y);
            if (last[static_cast<std::size_t>(i)] != x) {
                alt[static_cast<std::size_t>(i)] += 1;
                grew.push_back(i);
                --budget_sum;
            }
        }
        for (int i : grew) last[static_cast<std::size_t>(i)] = x;
        seq.push_back(x);
        if (x == used) ++used;
    }

    void undo(int x, const std::vector<int>& grew, const std::vector<int>& prev_last) {
        seq.pop_back();
        if (x == used - 1 && std::find(seq.begin(), seq.end(), x) == seq.end()) {
            --used;
        }
        for (std::size_t k = 0; k < grew.size(); ++k) {
            alt[static_cast<std::size_t>(grew[k])] -= 1;
            last[static_cast<std::size_t>(grew[k])] = prev_last[k];
            ++budget_sum;
        }
    }

    // A symbol is dead once some pair is saturated against it; it can never
    // appear again, so the live alphabet bounds the remaining extension.
    int alive_count() const {
        int cnt = 0;
        for (int x = 0; x < n; ++x) {
            bool ok = true;
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                int i = idx(x, y);
                if (alt[static_cast<std::size_t>(i)] == s + 1 &&
                    last[static_cast<std::size_t>(i)] == y) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++cnt;
        }
        return cnt;
    }
};

struct Searcher {
    int n, s;
    std::int64_t budget;
    const std::vector<long>& memo;  // memo[u] = lambda_s(u) for u < n
    std::atomic<std::int64_t>& nodes;
    std::atomic<bool>& aborted;
    long best = 0;

    void dfs(SearchState& st) {
        if (aborted.load(std::memory_order_relaxed)) return;
        std::int64_t seen = nodes.fetch_add(1, std::memory_order_relaxed);
        if (seen >= budget) {
            aborted.store(true, std::memory_order_relaxed);
            return;
        }
        best = std::max(best, static_cast<long>(st.seq.size()));

        long bound = st.budget_sum;
        int u = st.alive_count();
        if (u < n) bound = std::min(bound, memo[static_cast<std::size_t>(u)]);
        if (static_cast<long>(st.seq.size()) + bound <= best) return;

        std::vector<int> grew;
        std::vector<int> prev_last;
        int limit = std::min(st.used, n - 1);
        for (int x = 0; x <= limit; ++x) {
            if (!st.legal(x)) continue;
            prev_last.clear();
            grew.clear();
            for (int y = 0; y < n; ++y) {
                if (y == x) continue;
                int i = st.idx(x, y);
                if (st.last[static_cast<std::size_t>(i)] != x) {
                    prev_last.push_back(st.last[static_cast<std::size_t>(i)]);
                }
            }
            st.apply(x, grew);
            dfs(st);
            st.undo(x, grew, prev_last);
            if (aborted.load(std::memory_order_relaxed)) return;
        }
    }
};

// Capped incumbent search: shared-best DFS stopped after a fixed node count.
long incumbent(int n, int s, const std::vector<long>& memo) {
    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> aborted{false};
    Searcher sr{n, s, 200'000, memo, nodes, aborted};
    SearchState st(n, s);
    sr.dfs(st);
    return sr.best;
}

long solve_cell(int n, int s, const LambdaOptions& options,
                const std::vector<long>& memo) {
    if (n == 1) return 1;

    long start_best = incumbent(n, s, memo);

    // Frontier of canonical prefixes at a fixed depth; each subtree is then
    // searched exhaustively with only its local incumbent, so the explored
    // node set does not depend on thread count.
    const int frontier_depth = std::min(5, n + 1);
    std::vector<SearchState> frontier;
    {
        SearchState root(n, s);
        auto expand = [&](auto&& self, SearchState& st, int depth) -> void {
            if (depth == frontier_depth) {
                frontier.push_back(st);
                return;
            }
            int limit = std::min(st.used, n - 1);
            bool any = false;
            for (int x = 0; x <= limit; ++x) {
                if (!st.legal(x)) continue;
                any = true;
                std::vector<int> prev_last;
                for (int y = 0; y < n; ++y) {
                    if (y == x) continue;
                    int i = st.idx(x, y);
                    if (st.last[static_cast<std::size_t>(i)] != x) {
                        prev_last.push_back(st.last[static_cast<std::size_t>(i)]);
                    }
                }
                std::vector<int> grew_local;
                st.apply(x, grew_local);
                self(self, st, depth + 1);
                st.undo(x, grew_local, prev_last);
            }
            if (!any) frontier.push_back(st);  // leaf above the frontier
        };
        expand(expand, root, 0);
    }

    std::atomic<std::int64_t> nodes{0};
    std::atomic<bool> aborted{false};
    long best = start_best;

#pragma omp parallel for schedule(dynamic) reduction(max : best) if (options.parallel)
    for (long long i = 0; i < static_cast<long long>(frontier.size()); ++i) {
        if (aborted.load(std::memory_order_relaxed)) continue;
        Searcher sr{n, s, options.node_budget, memo, nodes, aborted};
        sr.best = start_best;
        SearchState st = frontier[static_cast<std::size_t>(i)];
        sr.dfs(st);
        best = std::max(best, sr.best);
    }

    if (aborted.load()) {
        throw BudgetError("lambda search exceeded the node budget of " +
                          std::to_string(options.node_budget));
    }
    return best;
}

}  // namespace

long lambda_exact(int n, int s, const LambdaOptions& options) {
    if (n < 1 || s < 1) throw InputError("lambda requires positive n and s");
    std::vector<long> memo;
    memo.push_back(0);  // lambda_s(0)
    for (int k = 1; k <= n; ++k) {
        memo.push_back(solve_cell(k, s, options, memo));
    }
    return memo.back();
}

namespace {

bool prefix_valid(const std::vector<int>& seq, int s) {
    if (seq.size() >= 2 && seq[seq.size() - 1] == seq[seq.size() - 2]) return false;
    SymbolSet alpha = SymbolSet::of(seq);
    for (std::size_t i = 0; i < alpha.ids.size(); ++i) {
        for (std::size_t j = i + 1; j < alpha.ids.size(); ++j) {
            if (pair_alternation(seq, alpha.ids[i], alpha.ids[j]).first > s + 1) {
                return false;
            }
        }
    }
    return true;
}

void reference_dfs(std::vector<int>& seq, int n, int s, long& best) {
    best = std::max(best, static_cast<long>(seq.size()));
    int used = 0;
    for (int x : seq) used = std::max(used, x + 1);
    for (int x = 0; x <= std::min(used, n - 1); ++x) {
        seq.push_back(x);
        if (prefix_valid(seq, s)) reference_dfs(seq, n, s, best);
        seq.pop_back();
    }
}

}  // namespace

long lambda_exact_reference(int n, int s) {
    if (n < 1 || s < 1) throw InputError("lambda requires positive n and s");
    std::vector<int> seq;
    long best = 0;
    reference_dfs(seq, n, s, best);
    return best;
}

}  // namespace dsarr::ds
