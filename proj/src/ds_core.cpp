#include "dsarr/ds_core.hpp"

#include <algorithm>
#include <map>

#include "dsarr/errors.hpp"

namespace dsarr::ds {

SymbolSet SymbolSet::of(std::vector<Symbol> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return SymbolSet{std::move(v)};
}

bool SymbolSet::contains(Symbol s) const {
    return std::binary_search(ids.begin(), ids.end(), s);
}

bool SymbolSet::disjoint_with(const SymbolSet& other) const {
    for (Symbol s : ids) {
        if (other.contains(s)) return false;
    }
    return true;
}

SymbolSet SymbolSet::united(const SymbolSet& other) const {
    std::vector<Symbol> out;
    std::set_union(ids.begin(), ids.end(), other.ids.begin(), other.ids.end(),
                   std::back_inserter(out));
    return SymbolSet{std::move(out)};
}

SymbolSet SymbolSet::intersected(const SymbolSet& other) const {
    std::vector<Symbol> out;
    std::set_intersection(ids.begin(), ids.end(), other.ids.begin(), other.ids.end(),
                          std::back_inserter(out));
    return SymbolSet{std::move(out)};
}

bool SymbolSet::subset_of(const SymbolSet& other) const {
    return std::includes(other.ids.begin(), other.ids.end(), ids.begin(), ids.end());
}

Sequence Sequence::over(std::vector<Symbol> items) {
    SymbolSet alphabet = SymbolSet::of(items);
    return Sequence{std::move(items), std::move(alphabet)};
}

Sequence Sequence::over(std::vector<Symbol> items, SymbolSet alphabet) {
    for (Symbol s : items) {
        if (!alphabet.contains(s)) {
            throw InputError("sequence item " + std::to_string(s) +
                             " is not in the declared alphabet");
        }
    }
    return Sequence{std::move(items), std::move(alphabet)};
}

Json Sequence::to_json() const {
    Json arr = Json::array();
    for (Symbol s : items) arr.push_back(s);
    return arr;
}

Json DsOrderReport::to_json() const {
    Json j;
    j["max_alternation_length"] = max_alternation_length;
    if (witness_pair) {
        j["witness_pair"] = Json::array({witness_pair->first, witness_pair->second});
    } else {
        j["witness_pair"] = nullptr;
    }
    j["witness_indices"] = witness_indices;
    j["has_adjacent_repeat"] = has_adjacent_repeat;
    if (has_adjacent_repeat) j["first_repeat_index"] = first_repeat_index;
    return j;
}

Sequence collapse(const Sequence& x) {
    std::vector<Symbol> out;
    out.reserve(x.items.size());
    for (Symbol s : x.items) {
        if (out.empty() || out.back() != s) out.push_back(s);
    }
    return Sequence{std::move(out), x.alphabet};
}

Sequence restrict_to(const Sequence& x, const SymbolSet& lam) {
    if (!lam.subset_of(x.alphabet)) {
        throw InputError("restriction set contains symbols outside the alphabet");
    }
    std::vector<Symbol> out;
    for (Symbol s : x.items) {
        if (lam.contains(s)) out.push_back(s);
    }
    return Sequence{std::move(out), lam};
}

std::pair<int, std::vector<int>> pair_alternation(const std::vector<Symbol>& items,
                                                  Symbol a, Symbol b) {
    // The longest strict alternation between two symbols equals the number of
    // maximal blocks in the subsequence of a's and b's; one index per block.
    std::vector<int> indices;
    Symbol last = -1;
    for (int i = 0; i < static_cast<int>(items.size()); ++i) {
        Symbol s = items[i];
        if (s != a && s != b) continue;
        if (s != last) {
            indices.push_back(i);
            last = s;
        }
    }
    return {static_cast<int>(indices.size()), std::move(indices)};
}

namespace {

struct PairScan {
    int length = 0;
    Symbol a = -1, b = -1;
};

// Occurrence lists per symbol let each pair be scanned in O(|a| + |b|).
std::vector<std::vector<int>> occurrences(const Sequence& x) {
    Symbol max_sym = -1;
    for (Symbol s : x.items) max_sym = std::max(max_sym, s);
    std::vector<std::vector<int>> occ(static_cast<std::size_t>(max_sym + 1));
    for (int i = 0; i < static_cast<int>(x.items.size()); ++i) {
        occ[static_cast<std::size_t>(x.items[i])].push_back(i);
    }
    return occ;
}

int blocks_of_pair(const std::vector<int>& oa, const std::vector<int>& ob) {
    std::size_t i = 0, j = 0;
    int blocks = 0;
    int last = -1;  // 0 = a, 1 = b
    while (i < oa.size() || j < ob.size()) {
        bool take_a = j == ob.size() || (i < oa.size() && oa[i] < ob[j]);
        int cur = take_a ? 0 : 1;
        if (take_a) {
            ++i;
        } else {
            ++j;
        }
        if (cur != last) {
            ++blocks;
            last = cur;
        }
    }
    return blocks;
}

DsOrderReport report_impl(const Sequence& x, bool parallel) {
    DsOrderReport rep;
    for (int i = 0; i + 1 < static_cast<int>(x.items.size()); ++i) {
        if (x.items[i] == x.items[i + 1]) {
            rep.has_adjacent_repeat = true;
            rep.first_repeat_index = i;
            break;
        }
    }
    if (x.items.empty()) return rep;
    if (SymbolSet::of(x.items).size() < 2) {
        rep.max_alternation_length = static_cast<int>(x.items.size());
        if (!x.items.empty()) {
            for (int i = 0; i < static_cast<int>(x.items.size()); ++i) {
                rep.witness_indices.push_back(i);
            }
        }
        return rep;
    }

    auto occ = occurrences(x);
    std::vector<Symbol> present;
    for (Symbol s = 0; s < static_cast<Symbol>(occ.size()); ++s) {
        if (!occ[static_cast<std::size_t>(s)].empty()) present.push_back(s);
    }
    std::vector<std::pair<Symbol, Symbol>> pairs;
    for (std::size_t i = 0; i < present.size(); ++i) {
        for (std::size_t j = i + 1; j < present.size(); ++j) {
            pairs.emplace_back(present[i], present[j]);
        }
    }

    PairScan best;
    if (parallel) {
        PairScan global;
#pragma omp parallel
        {
            PairScan local;
#pragma omp for schedule(static) nowait
            for (long long k = 0; k < static_cast<long long>(pairs.size()); ++k) {
                auto [a, b] = pairs[static_cast<std::size_t>(k)];
                int len = blocks_of_pair(occ[static_cast<std::size_t>(a)],
                                         occ[static_cast<std::size_t>(b)]);
                if (len > local.length ||
                    (len == local.length &&
                     std::make_pair(a, b) < std::make_pair(local.a, local.b))) {
                    local = {len, a, b};
                }
            }
#pragma omp critical
            {
                if (local.length > global.length ||
                    (local.length == global.length && local.a >= 0 &&
                     std::make_pair(local.a, local.b) <
                         std::make_pair(global.a, global.b))) {
                    global = local;
                }
            }
        }
        best = global;
    } else {
        for (auto [a, b] : pairs) {
            int len = blocks_of_pair(occ[static_cast<std::size_t>(a)],
                                     occ[static_cast<std::size_t>(b)]);
            if (len > best.length) best = {len, a, b};
        }
    }

    rep.max_alternation_length = best.length;
    if (best.a >= 0) {
        rep.witness_pair = std::make_pair(best.a, best.b);
        rep.witness_indices = pair_alternation(x.items, best.a, best.b).second;
    }
    return rep;
}

}  // namespace

DsOrderReport ds_report(const Sequence& x, bool parallel) {
    return report_impl(x, parallel);
}

DsOrderReport ds_report_serial(const Sequence& x) {
    return report_impl(x, false);
}

namespace {

void check_partition(const Sequence& x, const SymbolSet& sigma1, const SymbolSet& sigma2) {
    if (!sigma1.disjoint_with(sigma2)) {
        throw InputError("alphabet parts overlap");
    }
    if (!x.alphabet.subset_of(sigma1.united(sigma2))) {
        throw InputError("alphabet parts do not cover the sequence alphabet");
    }
}

}  // namespace

std::optional<FriendlyViolation> k_friendly_violation(const Sequence& x,
                                                      const SymbolSet& sigma1,
                                                      const SymbolSet& sigma2, int k) {
    check_partition(x, sigma1, sigma2);
    if (k < 1) throw InputError("k must be positive");
    int m = static_cast<int>(x.items.size());
    // Window [i, i+k] of k+1 items: 2-periodic, values from opposite parts.
    for (int i = 0; i + k < m; ++i) {
        Symbol a = x.items[i];
        Symbol b = x.items[i + 1];
        if (a == b) continue;
        bool a1 = sigma1.contains(a);
        bool b1 = sigma1.contains(b);
        if (a1 == b1) continue;
        bool ok = true;
        for (int j = i + 2; j <= i + k; ++j) {
            if (x.items[j] != x.items[j - 2]) {
                ok = false;
                break;
            }
        }
        if (ok) return FriendlyViolation{i, i + k};
    }
    return std::nullopt;
}

bool is_k_friendly(const Sequence& x, const SymbolSet& sigma1, const SymbolSet& sigma2,
                   int k) {
    return !k_friendly_violation(x, sigma1, sigma2, k).has_value();
}

Decomposition decompose(const Sequence& x, const SymbolSet& sigma1,
                        const SymbolSet& sigma2) {
    check_partition(x, sigma1, sigma2);
    for (std::size_t i = 0; i + 1 < x.items.size(); ++i) {
        if (x.items[i] == x.items[i + 1]) {
            throw InputError("decompose requires a repeat-free sequence");
        }
    }

    Decomposition d;
    d.l_prime = restrict_to(x, sigma1.intersected(x.alphabet));
    d.l = collapse(d.l_prime);
    d.r_prime = restrict_to(x, sigma2.intersected(x.alphabet));
    d.r = collapse(d.r_prime);
    d.delta_l = static_cast<int>(d.l_prime.size() - d.l.size());
    d.delta_r = static_cast<int>(d.r_prime.size() - d.r.size());
    d.charges_on_l.assign(d.l.size(), 0);
    d.charges_on_r.assign(d.r.size(), 0);

    // Positions in x per side, plus the collapsed index each restricted
    // occurrence survives into.
    auto charge_side = [&x](const SymbolSet& own, const SymbolSet& opp,
                            std::vector<int>& charges_on_opp) {
        std::vector<int> own_pos;   // x-positions of own-side occurrences
        for (int i = 0; i < static_cast<int>(x.items.size()); ++i) {
            if (own.contains(x.items[i])) own_pos.push_back(i);
        }
        // Map every x-position of an opposite occurrence to its collapsed index.
        std::vector<int> opp_collapsed(x.items.size(), -1);
        int cidx = -1;
        Symbol last = -1;
        for (int i = 0; i < static_cast<int>(x.items.size()); ++i) {
            Symbol s = x.items[i];
            if (!opp.contains(s)) continue;
            if (s != last) {
                ++cidx;
                last = s;
            }
            opp_collapsed[static_cast<std::size_t>(i)] = cidx;
        }

        // Each deleted occurrence b_i (adjacent equal pair in the restriction)
        // charges an opposite element in the gap between b_i and b_{i+1},
        // preferring one collapsing differently from the previous charge.
        int prev_target = -1;
        for (std::size_t k = 0; k + 1 < own_pos.size(); ++k) {
            int p = own_pos[k];
            int q = own_pos[k + 1];
            if (x.items[static_cast<std::size_t>(p)] !=
                x.items[static_cast<std::size_t>(q)]) {
                prev_target = -1;
                continue;
            }
            int chosen = -1;
            for (int i = p + 1; i < q; ++i) {
                int c = opp_collapsed[static_cast<std::size_t>(i)];
                if (c < 0) continue;
                if (chosen < 0) chosen = c;
                if (c != prev_target) {
                    chosen = c;
                    break;
                }
            }
            if (chosen < 0) {
                throw InternalError("repeat-free sequence has an empty gap between "
                                    "equal restricted neighbors");
            }
            charges_on_opp[static_cast<std::size_t>(chosen)] += 1;
            prev_target = chosen;
        }
    };

    charge_side(sigma1, sigma2, d.charges_on_r);
    charge_side(sigma2, sigma1, d.charges_on_l);

    for (int c : d.charges_on_l) d.max_charge = std::max(d.max_charge, c);
    for (int c : d.charges_on_r) d.max_charge = std::max(d.max_charge, c);

    if (static_cast<int>(x.items.size()) !=
        static_cast<int>(d.l.size() + d.r.size()) + d.delta_l + d.delta_r) {
        throw InternalError("decomposition identity failed");
    }
    return d;
}

}  // namespace dsarr::ds
