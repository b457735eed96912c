#include <doctest.h>

#include <quasicartan/matrix.hpp>
#include <quasicartan/oracle.hpp>

#include "test_support.hpp"

#include <stdexcept>

using namespace quasicartan;
using namespace quasicartan::testing;

TEST_CASE("sign predicates") {
    CHECK(is_symmetric_by_signs({{2, 1}, {1, 2}}));
    CHECK_FALSE(is_symmetric_by_signs({{0, 1}, {-1, 0}}));
    CHECK_FALSE(is_symmetric_by_signs({{0, 1}, {0, 0}}));
    CHECK(is_symmetric_by_signs({{-5, 3}, {7, 9}}));  // diagonal unconstrained

    CHECK(is_skew_symmetric_by_signs({{0, 1}, {-1, 0}}));
    CHECK_FALSE(is_skew_symmetric_by_signs({{0, 1}, {1, 0}}));
    CHECK_FALSE(is_skew_symmetric_by_signs({{1, 1}, {-1, 0}}));
    CHECK_FALSE(is_skew_symmetric_by_signs({{0, 0}, {-1, 0}}));
    CHECK(is_skew_symmetric_by_signs(IntMatrix(0)));
}

TEST_CASE("skew by signs implies |B| is symmetric by signs") {
    Generator gen(11);
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 5));
        IntMatrix b = gen.random_matrix(n, -2, 2);
        for (std::size_t i = 0; i < n; ++i) b(i, i) = 0;
        if (!is_skew_symmetric_by_signs(b)) continue;
        CHECK(is_symmetric_by_signs(abs(b)));
    }
}

TEST_CASE("principal and leading submatrices") {
    const IntMatrix cplus = example_cplus();
    const std::vector<std::size_t> first_three{0, 1, 2};
    CHECK(principal_submatrix(cplus, first_three) == IntMatrix{{2, 1, 1}, {1, 2, 0}, {1, 0, 2}});

    const std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(principal_submatrix(cplus, all) == cplus);

    const std::vector<std::size_t> second{1};
    CHECK(principal_submatrix(IntMatrix{{2, 3}, {1, 2}}, second) == IntMatrix{{2}});

    const std::vector<std::size_t> bad{0, 4};
    CHECK_THROWS_AS(principal_submatrix(cplus, bad), std::out_of_range);

    CHECK(remove_index(cplus, 3) == IntMatrix{{2, 1, 1}, {1, 2, 0}, {1, 0, 2}});

    CHECK(leading_principal_submatrix(cplus, 2) == IntMatrix{{2, 1}, {1, 2}});
    CHECK(leading_principal_submatrix(cplus, 4) == cplus);
    CHECK(leading_principal_submatrix(example_c(), 1) == IntMatrix{{2}});
    CHECK_THROWS_AS(leading_principal_submatrix(cplus, 0), std::out_of_range);
    CHECK_THROWS_AS(leading_principal_submatrix(cplus, 5), std::out_of_range);
}

TEST_CASE("direct sum") {
    CHECK(direct_sum(IntMatrix{{2}}, IntMatrix{{3}}) == IntMatrix{{2, 0}, {0, 3}});
    CHECK(direct_sum(example_c(), IntMatrix(0)) == example_c());
    CHECK(direct_sum(IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, 2}, {2, 0}}) ==
          IntMatrix{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 2}, {0, 0, 2, 0}});
}

TEST_CASE("permutations") {
    const IntMatrix a{{0, 1}, {2, 0}};
    CHECK(permute(a, Permutation::identity(2)) == a);
    CHECK(permute(a, Permutation::transposition(2, 0, 1)) == IntMatrix{{0, 2}, {1, 0}});
    CHECK_THROWS_AS(permute(a, Permutation::identity(3)), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({0, 3, 1}), std::invalid_argument);

    Generator gen(5);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 6));
        const IntMatrix m = gen.random_matrix(n, -3, 3);
        const Permutation p = gen.random_permutation(n);
        CHECK(permute(permute(m, p), p.inverse()) == m);
    }
}

TEST_CASE("connected components") {
    const auto split = connected_components(direct_sum(IntMatrix{{0, 1}, {1, 0}}, IntMatrix{{0, 2}, {2, 0}}));
    CHECK(split.blocks == std::vector<std::vector<std::size_t>>{{0, 1}, {2, 3}});
    CHECK_FALSE(split.connected());

    CHECK(connected_components(example_cplus()).blocks == std::vector<std::vector<std::size_t>>{{0, 1, 2, 3}});
    CHECK(connected_components(IntMatrix(3)).blocks == std::vector<std::vector<std::size_t>>{{0}, {1}, {2}});
    CHECK(is_connected(IntMatrix{{5}}));
    CHECK(is_connected(IntMatrix(0)));

    // One-sided entries still connect.
    CHECK(is_connected(IntMatrix{{0, 0, 0}, {1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("components are invariant under permutation up to relabeling") {
    Generator gen(19);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 7));
        const IntMatrix a = gen.random_sign_symmetric(n, 2, 0.7);
        const Permutation p = gen.random_permutation(n);
        const auto before = connected_components(a);
        const auto after = connected_components(permute(a, p));
        REQUIRE(before.blocks.size() == after.blocks.size());
        const auto owner_after = after.block_of(n);
        for (const auto& block : before.blocks) {
            for (std::size_t v : block) {
                CHECK(owner_after[p(v)] == owner_after[p(block.front())]);
            }
            CHECK(after.blocks[owner_after[p(block.front())]].size() == block.size());
        }
    }
}

TEST_CASE("determinant on fixtures") {
    CHECK(determinant(example_c()) == 4);
    CHECK(determinant(example_cplus()) == 0);
    CHECK(determinant(IntMatrix(0)) == 1);
    CHECK(determinant(IntMatrix{{-7}}) == -7);
    for (long c = -3; c <= 3; ++c) {
        for (long d = -3; d <= 3; ++d) {
            CHECK(determinant(IntMatrix{{2, c}, {d, 2}}) == 4 - c * d);
        }
    }
    // Needs a row swap: zero leading pivot.
    CHECK(determinant(IntMatrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}}) == -1);
    CHECK(determinant(IntMatrix{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}) == -1);
}

TEST_CASE("determinant agrees with cofactor expansion") {
    Generator gen(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 5));
        const IntMatrix a = gen.random_matrix(n, -3, 3);
        REQUIRE(determinant(a) == oracle::cofactor_determinant(a));
    }
}

TEST_CASE("determinant is multiplicative over direct sums and permutation invariant") {
    Generator gen(77);
    for (int trial = 0; trial < 1000; ++trial) {
        const IntMatrix a = gen.random_matrix(static_cast<std::size_t>(gen.uniform(0, 5)), -3, 3);
        const IntMatrix b = gen.random_matrix(static_cast<std::size_t>(gen.uniform(0, 5)), -3, 3);
        CHECK(determinant(direct_sum(a, b)) == determinant(a) * determinant(b));
        CHECK(determinant(permute(a, gen.random_permutation(a.size()))) == determinant(a));
    }
}

TEST_CASE("determinant stays exact beyond 64 bits") {
    // 10^10 * I has determinant 10^100 at n = 10.
    IntMatrix a(10);
    for (std::size_t i = 0; i < 10; ++i) a(i, i) = BigInt("10000000000");
    BigInt expected;
    mpz_ui_pow_ui(expected.get_mpz_t(), 10, 100);
    CHECK(determinant(a) == expected);
}

TEST_CASE("IntMatrix construction") {
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), std::invalid_argument);
    CHECK_THROWS_AS(IntMatrix(2).at(2, 0), std::out_of_range);
    CHECK(IntMatrix::identity(3) == IntMatrix{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
}
