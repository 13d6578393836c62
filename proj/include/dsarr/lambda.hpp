#pragma once

#include <cstdint>

namespace dsarr::ds {

struct LambdaOptions {
    // DFS node budget; the search throws BudgetError once exceeded, naming it.
    std::int64_t node_budget = 400'000'000;
    bool parallel = true;
};

// Exact maximum length of a sequence over n symbols with no two equal
// adjacent symbols and no alternating subsequence of length s + 2 between
// any symbol pair. Depth-first search over canonical sequences (first
// occurrences in increasing id order), with alternation-budget pruning and
// memoized bounds from smaller alphabets. Deterministic, including under
// parallel subtree exploration.
long lambda_exact(int n, int s, const LambdaOptions& options = {});

// Straightforward serial DFS that re-derives legality from scratch at every
// step. Kept as an independent reference for tests and benchmarks; only
// usable for small cells.
long lambda_exact_reference(int n, int s);

}  // namespace dsarr::ds
