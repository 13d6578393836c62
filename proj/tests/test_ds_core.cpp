#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsarr/ds_core.hpp"
#include "dsarr/errors.hpp"
#include "oracles.hpp"

using namespace dsarr;
using namespace dsarr::ds;

namespace {

Sequence seq(std::vector<Symbol> v) { return Sequence::over(std::move(v)); }

std::vector<Symbol> random_items(test::Rng& rng, int alphabet, int len) {
    std::vector<Symbol> v;
    for (int i = 0; i < len; ++i) {
        v.push_back(static_cast<Symbol>(rng.range(0, alphabet - 1)));
    }
    return v;
}

}  // namespace

TEST_CASE("collapse flattens runs") {
    // a,b,b,b,b,c,c,d -> a,b,c,d
    CHECK(collapse(seq({0, 1, 1, 1, 1, 2, 2, 3})).items ==
          std::vector<Symbol>{0, 1, 2, 3});
    CHECK(collapse(seq({})).items.empty());
    CHECK(collapse(seq({0, 0, 0})).items == std::vector<Symbol>{0});
}

TEST_CASE("collapse is idempotent") {
    test::Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        Sequence x = seq(random_items(rng, 4, static_cast<int>(rng.range(0, 20))));
        Sequence once = collapse(x);
        Sequence twice = collapse(once);
        CHECK(once.items == twice.items);
        // output has no equal adjacent symbols
        for (std::size_t i = 0; i + 1 < once.items.size(); ++i) {
            CHECK(once.items[i] != once.items[i + 1]);
        }
    }
}

TEST_CASE("restrict_to keeps exactly the chosen symbols") {
    CHECK(restrict_to(seq({0, 1, 2, 0}), SymbolSet::of({0, 2})).items ==
          std::vector<Symbol>{0, 2, 0});
    CHECK(restrict_to(seq({0, 1}), SymbolSet::of({})).items.empty());
    CHECK(restrict_to(seq({0, 1, 0, 1}), SymbolSet::of({1})).items ==
          std::vector<Symbol>{1, 1});
}

TEST_CASE("restrict_to rejects out-of-alphabet symbols") {
    CHECK_THROWS_AS(restrict_to(seq({0, 1}), SymbolSet::of({0, 7})), InputError);
}

TEST_CASE("nested restrictions compose through intersection") {
    test::Rng rng(12);
    for (int t = 0; t < 200; ++t) {
        Sequence x = seq(random_items(rng, 5, static_cast<int>(rng.range(0, 24))));
        SymbolSet lam1 = SymbolSet::of({0, 1, 2, 3});
        SymbolSet lam2 = SymbolSet::of({1, 3});
        Sequence lhs = restrict_to(restrict_to(x, lam1.intersected(x.alphabet)),
                                   lam2.intersected(x.alphabet).intersected(lam1));
        Sequence rhs = restrict_to(x, lam1.intersected(lam2).intersected(x.alphabet));
        CHECK(lhs.items == rhs.items);
    }
}

TEST_CASE("ds_report on small fixtures") {
    auto r = ds_report(seq({0, 1, 0}));
    CHECK(r.max_alternation_length == 3);
    CHECK(r.ds_of_order(2));
    CHECK_FALSE(r.ds_of_order(1));

    r = ds_report(seq({0, 1, 0, 1}));
    CHECK(r.max_alternation_length == 4);

    r = ds_report(seq({0, 0}));
    CHECK(r.has_adjacent_repeat);
    CHECK(r.first_repeat_index == 0);
}

TEST_CASE("ds_report witness realizes the reported alternation") {
    test::Rng rng(13);
    for (int t = 0; t < 300; ++t) {
        Sequence x = seq(random_items(rng, 5, static_cast<int>(rng.range(2, 30))));
        auto r = ds_report(x);
        if (!r.witness_pair) continue;
        auto [a, b] = *r.witness_pair;
        // indices strictly increase and strictly alternate between a and b
        REQUIRE(static_cast<int>(r.witness_indices.size()) == r.max_alternation_length);
        for (std::size_t i = 0; i < r.witness_indices.size(); ++i) {
            Symbol s = x.items[static_cast<std::size_t>(r.witness_indices[i])];
            CHECK((s == a || s == b));
            if (i > 0) {
                CHECK(r.witness_indices[i] > r.witness_indices[i - 1]);
                Symbol p = x.items[static_cast<std::size_t>(r.witness_indices[i - 1])];
                CHECK(s != p);
            }
        }
    }
}

TEST_CASE("ds_report agrees with the pairwise DP oracle on 1000 random sequences") {
    test::Rng rng(14);
    for (int t = 0; t < 1000; ++t) {
        int alpha = static_cast<int>(rng.range(1, 6));
        int len = static_cast<int>(rng.range(0, 30));
        Sequence x = seq(random_items(rng, alpha, len));
        auto r = ds_report(x);
        CHECK(r.max_alternation_length == test::dp_max_alternation(x.items));
    }
}

TEST_CASE("parallel and serial ds_report agree") {
    test::Rng rng(15);
    for (int t = 0; t < 100; ++t) {
        Sequence x = seq(random_items(rng, 8, static_cast<int>(rng.range(0, 60))));
        auto a = ds_report(x, true);
        auto b = ds_report_serial(x);
        CHECK(a.max_alternation_length == b.max_alternation_length);
        CHECK(a.witness_pair == b.witness_pair);
        CHECK(a.witness_indices == b.witness_indices);
    }
}

TEST_CASE("k-friendliness windows") {
    SymbolSet s1 = SymbolSet::of({0});
    SymbolSet s2 = SymbolSet::of({1, 2});
    // l,r,l,r with k=3: window of 4 alternating items
    auto v = k_friendly_violation(seq({0, 1, 0, 1}), s1, s2, 3);
    REQUIRE(v.has_value());
    CHECK(v->window_begin == 0);
    CHECK(v->window_end == 3);
    // k=4: no window of 5 exists
    CHECK(is_k_friendly(seq({0, 1, 0, 1}), s1, s2, 4));
    // l,r,r',l with distinct r,r': not an alternation of a single pair
    CHECK(is_k_friendly(seq({0, 1, 2, 0}), s1, s2, 2));
}

TEST_CASE("k-friendliness rejects overlapping parts") {
    CHECK_THROWS_AS(
        is_k_friendly(seq({0, 1}), SymbolSet::of({0, 1}), SymbolSet::of({1}), 2),
        InputError);
}

TEST_CASE("same-part alternations do not violate friendliness") {
    SymbolSet s1 = SymbolSet::of({0, 1});
    SymbolSet s2 = SymbolSet::of({2, 3});
    CHECK(is_k_friendly(seq({0, 1, 0, 1, 0, 1}), s1, s2, 2));
    CHECK(is_k_friendly(seq({2, 3, 2, 3, 2, 3}), s1, s2, 2));
    CHECK_FALSE(is_k_friendly(seq({0, 2, 0, 2}), s1, s2, 2));
}

TEST_CASE("decomposition identity on fixtures") {
    SymbolSet s1 = SymbolSet::of({0, 1});
    SymbolSet s2 = SymbolSet::of({2, 3});
    // l,r,l: L' = l,l -> L = l; R' = R = r
    auto d = decompose(seq({0, 2, 0}), s1, s2);
    CHECK(d.l_prime.items == std::vector<Symbol>{0, 0});
    CHECK(d.l.items == std::vector<Symbol>{0});
    CHECK(d.r.items == std::vector<Symbol>{2});
    CHECK(d.delta_l == 1);
    CHECK(d.delta_r == 0);

    // both symbols on the left: no collapse anywhere
    d = decompose(seq({0, 1}), s1, s2);
    CHECK(d.delta_l == 0);
    CHECK(d.delta_r == 0);
}

TEST_CASE("decomposition rejects adjacent repeats") {
    CHECK_THROWS_AS(
        decompose(seq({0, 0, 2}), SymbolSet::of({0, 1}), SymbolSet::of({2, 3})),
        InputError);
}

TEST_CASE("exhaustive small-scale decomposition: identity and charge bound") {
    // All repeat-free sequences over {0,1} ∪ {2,3} up to length 12 that are
    // k-friendly with DS-order-s collapsed restrictions: identity holds and
    // no element is charged more than k times.
    SymbolSet s1 = SymbolSet::of({0, 1});
    SymbolSet s2 = SymbolSet::of({2, 3});
    for (int k : {2, 3}) {
        for (int s : {1, 2}) {
            long checked = 0;
            std::vector<Symbol> cur;
            auto rec = [&](auto&& self) -> void {
                if (!cur.empty()) {
                    Sequence x = Sequence::over(cur, SymbolSet::of({0, 1, 2, 3}));
                    if (!is_k_friendly(x, s1, s2, k)) return;  // prefix-closed
                    auto d = decompose(x, s1, s2);
                    bool l_ok = ds_report_serial(d.l).ds_of_order(s);
                    bool r_ok = ds_report_serial(d.r).ds_of_order(s);
                    if (l_ok && r_ok) {
                        ++checked;
                        CHECK(static_cast<int>(x.size()) ==
                              static_cast<int>(d.l.size() + d.r.size()) + d.delta_l +
                                  d.delta_r);
                        CHECK(d.max_charge <= k);
                    }
                }
                if (cur.size() == 12) return;
                for (Symbol s_next = 0; s_next < 4; ++s_next) {
                    if (!cur.empty() && cur.back() == s_next) continue;
                    cur.push_back(s_next);
                    self(self);
                    cur.pop_back();
                }
            };
            rec(rec);
            CHECK(checked > 0);
        }
    }
}
