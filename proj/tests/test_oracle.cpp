#include <doctest.h>

#include <quasicartan/errors.hpp>
#include <quasicartan/oracle.hpp>

#include "test_support.hpp"

using namespace quasicartan;
using namespace quasicartan::testing;

TEST_CASE("cycle_symmetrizable") {
    CHECK_FALSE(oracle::cycle_symmetrizable({{0, 1, 2}, {2, 0, 1}, {1, 2, 0}}));
    CHECK(oracle::cycle_symmetrizable({{1, 2, 3}, {2, 1, 4}, {3, 4, 1}}));
    CHECK(oracle::cycle_symmetrizable({{0, 2}, {1, 0}}));
    CHECK_FALSE(oracle::cycle_symmetrizable({{0, 2}, {-1, 0}}));
    // 4-cycle 1-2-3-4 with no chords: forward 2*1*1*1, backward 1*1*1*1.
    CHECK_FALSE(oracle::cycle_symmetrizable({{0, 2, 0, 1}, {1, 0, 1, 0}, {0, 1, 0, 1}, {1, 0, 1, 0}}));
    CHECK_THROWS_AS(oracle::cycle_symmetrizable(IntMatrix(9)), OracleLimitExceeded);
}

TEST_CASE("cofactor_determinant") {
    CHECK(oracle::cofactor_determinant(example_cplus()) == 0);
    CHECK(oracle::cofactor_determinant(example_c()) == 4);
    IntMatrix two(3);
    for (std::size_t i = 0; i < 3; ++i) two(i, i) = 2;
    CHECK(oracle::cofactor_determinant(two) == 8);
    for (long c = -2; c <= 2; ++c) {
        for (long d = -2; d <= 2; ++d) {
            CHECK(oracle::cofactor_determinant(IntMatrix{{2, c}, {d, 2}}) == 4 - c * d);
        }
    }
    CHECK(oracle::cofactor_determinant(IntMatrix(0)) == 1);
    CHECK_THROWS_AS(oracle::cofactor_determinant(IntMatrix(9)), OracleLimitExceeded);
}

TEST_CASE("cofactor expansion along the first row matches the second-row expansion") {
    // Second independent route for the oracle itself.
    Generator gen(123);
    for (int trial = 0; trial < 200; ++trial) {
        const IntMatrix a = gen.random_matrix(4, -3, 3);
        BigInt second_row = 0;
        for (std::size_t col = 0; col < 4; ++col) {
            std::vector<std::size_t> rows{0, 2, 3};
            IntMatrix minor(3);
            for (std::size_t r = 0; r < 3; ++r) {
                for (std::size_t c = 0, mc = 0; c < 4; ++c) {
                    if (c != col) minor(r, mc++) = a(rows[r], c);
                }
            }
            const BigInt term = a(1, col) * oracle::cofactor_determinant(minor);
            second_row += (col % 2 == 0) ? BigInt(-term) : term;
        }
        CHECK(second_row == oracle::cofactor_determinant(a));
    }
}

TEST_CASE("exhaustive_companion") {
    const auto example = oracle::exhaustive_companion(example_b());
    CHECK(example.found);
    CHECK(oracle::all_principal_minors_positive_cofactor(*example.companion));

    const auto none = oracle::exhaustive_companion({{0, 2}, {-2, 0}});
    CHECK_FALSE(none.found);
    CHECK(none.assignments_tried == 2);

    const auto zero = oracle::exhaustive_companion(IntMatrix(2));
    CHECK(zero.found);
    CHECK(*zero.companion == IntMatrix{{2, 0}, {0, 2}});

    CHECK_THROWS_AS(oracle::exhaustive_companion(IntMatrix(5)), OracleLimitExceeded);
}
