#include <doctest.h>

#include <random>

#include "toric/linalg.hpp"

using namespace toric;

TEST_CASE("hnf_rows canonical form") {
    IntMat m{{Int(4), Int(6)}, {Int(2), Int(2)}};
    IntMat h = hnf_rows(m);
    REQUIRE(h.size() == 2);
    // pivots positive, entries above reduced
    CHECK(h[0][0] > 0);
    CHECK(h[1][0] == 0);
    CHECK(h[1][1] > 0);
    CHECK(h[0][1] >= 0);
    CHECK(h[0][1] < h[1][1]);

    SUBCASE("idempotent") { CHECK(hnf_rows(h) == h); }

    SUBCASE("invariant under row mixing") {
        IntMat mixed{{Int(4) + Int(2), Int(6) + Int(2)},
                     {Int(2), Int(2)},
                     {Int(4) - 3 * Int(2), Int(6) - 3 * Int(2)}};
        CHECK(hnf_rows(mixed) == h);
    }
}

TEST_CASE("hnf_rows drops zero rows and handles negatives") {
    IntMat m{{Int(0), Int(0)}, {Int(-3), Int(2)}};
    IntMat h = hnf_rows(m);
    REQUIRE(h.size() == 1);
    CHECK(h[0] == IntRow{Int(3), Int(-2)});
}

TEST_CASE("int_rank") {
    CHECK(int_rank({{Int(1), Int(1)}, {Int(2), Int(2)}}) == 1);
    CHECK(int_rank({{Int(1), Int(0)}, {Int(0), Int(1)}}) == 2);
    CHECK(int_rank({{Int(0), Int(0)}}) == 0);
}

TEST_CASE("integer_kernel of [[2,3]]") {
    IntMat a{{Int(2), Int(3)}};
    IntMat k = integer_kernel(a, 2);
    // brute-force oracle: every box solution of 2p + 3q = 0 is a multiple
    // of (3,-2)
    for (int p = -10; p <= 10; ++p)
        for (int q = -10; q <= 10; ++q)
            if (2 * p + 3 * q == 0 && (p != 0 || q != 0)) {
                CHECK(p % 3 == 0);
                CHECK(q == -2 * (p / 3));
            }
    REQUIRE(k.size() == 1);
    CHECK(k[0] == IntRow{Int(3), Int(-2)});
}

TEST_CASE("integer_kernel of the identity is empty") {
    IntMat id{{Int(1), Int(0)}, {Int(0), Int(1)}};
    CHECK(integer_kernel(id, 2).empty());
}

TEST_CASE("kernel vectors satisfy A*v = 0 on random matrices") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t d = 1 + rng() % 3, r = 1 + rng() % 5;
        IntMat a(d, IntRow(r));
        for (auto& row : a)
            for (auto& x : row) x = entry(rng);
        IntMat kernel = integer_kernel(a, r);
        CHECK(kernel.size() == r - int_rank(a));
        for (const IntRow& v : kernel) {
            for (std::size_t i = 0; i < d; ++i) {
                Int s = 0;
                for (std::size_t j = 0; j < r; ++j) s += a[i][j] * v[j];
                CHECK(s == 0);
            }
        }
        CHECK(hnf_rows(kernel) == kernel);
    }
}
