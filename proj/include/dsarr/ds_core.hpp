#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dsarr/rational.hpp"

namespace dsarr::ds {

// Symbols are dense interned ids; callers keep their own name tables.
using Symbol = int;

struct SymbolSet {
    std::vector<Symbol> ids;  // sorted, unique

    static SymbolSet of(std::vector<Symbol> v);
    bool contains(Symbol s) const;
    bool disjoint_with(const SymbolSet& other) const;
    SymbolSet united(const SymbolSet& other) const;
    SymbolSet intersected(const SymbolSet& other) const;
    bool subset_of(const SymbolSet& other) const;
    std::size_t size() const { return ids.size(); }
};

struct Sequence {
    std::vector<Symbol> items;
    SymbolSet alphabet;

    static Sequence over(std::vector<Symbol> items);  // alphabet = occurring symbols
    static Sequence over(std::vector<Symbol> items, SymbolSet alphabet);
    std::size_t size() const { return items.size(); }
    Json to_json() const;
};

// A DS-sequence of order s has no two equal adjacent symbols and no
// alternating subsequence a,b,a,b,... of length s+2.
struct DsOrderReport {
    int max_alternation_length = 0;
    std::optional<std::pair<Symbol, Symbol>> witness_pair;
    std::vector<int> witness_indices;  // realize the longest alternation
    bool has_adjacent_repeat = false;
    int first_repeat_index = -1;  // index i with items[i] == items[i+1]

    bool ds_of_order(int s) const {
        return !has_adjacent_repeat && max_alternation_length <= s + 1;
    }
    Json to_json() const;
};

// Replaces each maximal run of identical consecutive symbols by one symbol.
Sequence collapse(const Sequence& x);

// Keeps exactly the items belonging to lam, in order. lam must be a subset
// of the sequence's alphabet.
Sequence restrict_to(const Sequence& x, const SymbolSet& lam);

// Longest alternation a,b,a,b,... over any pair of distinct symbols, with a
// witness. The pair loop runs under OpenMP unless parallel is false; the
// result is deterministic either way (ties break toward the smaller pair).
DsOrderReport ds_report(const Sequence& x, bool parallel = true);
DsOrderReport ds_report_serial(const Sequence& x);

// Longest strict alternation between just a and b, with realizing indices.
std::pair<int, std::vector<int>> pair_alternation(const std::vector<Symbol>& items,
                                                  Symbol a, Symbol b);

struct FriendlyViolation {
    int window_begin = 0;  // inclusive
    int window_end = 0;    // inclusive, window of k+1 consecutive items
};

// A sequence over sigma1 ∪ sigma2 is k-friendly when no window of k+1
// consecutive items alternates strictly between one symbol of sigma1 and one
// of sigma2. The two sets must partition the alphabet.
std::optional<FriendlyViolation> k_friendly_violation(const Sequence& x,
                                                      const SymbolSet& sigma1,
                                                      const SymbolSet& sigma2, int k);
bool is_k_friendly(const Sequence& x, const SymbolSet& sigma1, const SymbolSet& sigma2,
                   int k);

// Decomposition of a repeat-free sequence over two disjoint alphabets:
//   l_prime = x|sigma1, l = collapse(l_prime), same on the right, and
//   |x| = |l| + |r| + delta_l + delta_r exactly.
// Each occurrence deleted by a collapse is charged to a surviving element of
// the opposite collapsed restriction; charges_on_* count them per element.
struct Decomposition {
    Sequence l_prime, l, r_prime, r;
    int delta_l = 0;
    int delta_r = 0;
    std::vector<int> charges_on_l;  // size |l|, fed by delta_r
    std::vector<int> charges_on_r;  // size |r|, fed by delta_l
    int max_charge = 0;
};

Decomposition decompose(const Sequence& x, const SymbolSet& sigma1,
                        const SymbolSet& sigma2);

}  // namespace dsarr::ds
