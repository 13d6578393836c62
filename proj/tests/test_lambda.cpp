#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dsarr/errors.hpp"
#include "dsarr/lambda.hpp"

using namespace dsarr;
using namespace dsarr::ds;

TEST_CASE("order-1 and order-2 closed forms, n up to 8") {
    for (int n = 1; n <= 8; ++n) {
        CHECK(lambda_exact(n, 1) == n);
        CHECK(lambda_exact(n, 2) == 2 * n - 1);
    }
}

TEST_CASE("two symbols, order 3: abab is maximal") {
    CHECK(lambda_exact(2, 3) == 4);
    CHECK(lambda_exact_reference(2, 3) == 4);
}

TEST_CASE("search agrees with the reference enumerator on small cells") {
    for (int n = 1; n <= 3; ++n) {
        for (int s = 1; s <= 3; ++s) {
            CHECK(lambda_exact(n, s) == lambda_exact_reference(n, s));
        }
    }
    CHECK(lambda_exact(4, 2) == lambda_exact_reference(4, 2));
}

TEST_CASE("monotone in both arguments") {
    long prev_n = 0;
    for (int n = 1; n <= 6; ++n) {
        long v = lambda_exact(n, 2);
        CHECK(v >= prev_n);
        prev_n = v;
    }
    long prev_s = 0;
    for (int s = 1; s <= 3; ++s) {
        long v = lambda_exact(4, s);
        CHECK(v >= prev_s);
        prev_s = v;
    }
}

TEST_CASE("parallel and serial searches agree") {
    LambdaOptions par;
    par.parallel = true;
    LambdaOptions ser;
    ser.parallel = false;
    for (int n = 2; n <= 5; ++n) {
        CHECK(lambda_exact(n, 2, par) == lambda_exact(n, 2, ser));
    }
    CHECK(lambda_exact(3, 3, par) == lambda_exact(3, 3, ser));
}

TEST_CASE("node budget is enforced and named") {
    LambdaOptions opts;
    opts.node_budget = 50;
    try {
        lambda_exact(7, 3, opts);
        FAIL("expected BudgetError");
    } catch (const BudgetError& e) {
        CHECK(std::string(e.what()).find("50") != std::string::npos);
    }
}

TEST_CASE("rejects non-positive arguments") {
    CHECK_THROWS_AS(lambda_exact(0, 1), InputError);
    CHECK_THROWS_AS(lambda_exact(1, 0), InputError);
}
