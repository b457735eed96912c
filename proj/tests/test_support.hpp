#pragma once

// Fixtures and random generators shared by the unit and acceptance suites.

#include <quasicartan/matrix.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace quasicartan::testing {

// The 4x4 example pair: B with the printed magnitudes (oriented to be
// skew-symmetric), the positive companion C, and C+ which is not positive.
inline IntMatrix example_b() {
    return {{0, 1, 1, 0}, {-1, 0, 0, 1}, {-1, 0, 0, 1}, {0, -1, -1, 0}};
}
inline IntMatrix example_b_as_printed() {
    return {{0, 1, 1, 0}, {1, 0, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0}};
}
inline IntMatrix example_c() {
    return {{2, -1, 1, 0}, {-1, 2, 0, 1}, {1, 0, 2, 1}, {0, 1, 1, 2}};
}
inline IntMatrix example_cplus() {
    return {{2, 1, 1, 0}, {1, 2, 0, 1}, {1, 0, 2, 1}, {0, 1, 1, 2}};
}

/// b_ij = 1 above the diagonal, -1 below.
inline IntMatrix all_ones_skew(std::size_t n) {
    IntMatrix b(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i < j) b(i, j) = 1;
            if (i > j) b(i, j) = -1;
        }
    }
    return b;
}

class Generator {
public:
    explicit Generator(std::uint64_t seed) : rng_(seed) {}

    long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    IntMatrix random_matrix(std::size_t n, long lo, long hi) {
        IntMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = uniform(lo, hi);
        }
        return a;
    }

    /// Off-diagonal pairs are both zero or share a sign; magnitudes in 1..bound.
    IntMatrix random_sign_symmetric(std::size_t n, long bound, double zero_prob) {
        IntMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            a(i, i) = uniform(-bound, bound);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (coin(zero_prob)) continue;
                const long s = coin() ? 1 : -1;
                a(i, j) = s * uniform(1, bound);
                a(j, i) = s * uniform(1, bound);
            }
        }
        return a;
    }

    /// E S with S symmetric and E a positive integer diagonal, so E^-1
    /// symmetrizes the result. With quasi_cartan the diagonal is reset to 2.
    IntMatrix random_symmetrizable(std::size_t n, long bound, long max_scale, double zero_prob,
                                   bool quasi_cartan) {
        IntMatrix s(n);
        for (std::size_t i = 0; i < n; ++i) {
            s(i, i) = quasi_cartan ? 2 : uniform(-bound, bound);
            for (std::size_t j = i + 1; j < n; ++j) {
                if (coin(zero_prob)) continue;
                s(i, j) = s(j, i) = uniform(-bound, bound);
            }
        }
        std::vector<long> e(n);
        for (auto& v : e) v = uniform(1, max_scale);
        IntMatrix a(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) a(i, j) = s(i, j) * e[i];
        }
        if (quasi_cartan) {
            for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
        }
        return a;
    }

    /// Skew-symmetrizable with |b_ij| in {1..2}, every off-diagonal entry
    /// nonzero: pick d_i in {1, 2} and magnitudes with d_i |b_ij| = d_j |b_ji|.
    IntMatrix random_dense_skew_symmetrizable(std::size_t n) {
        std::vector<long> d(n);
        for (auto& v : d) v = uniform(1, 2);
        IntMatrix b(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                long mij;
                long mji;
                if (d[i] == d[j]) {
                    mij = mji = uniform(1, 2);
                } else if (d[i] < d[j]) {
                    mij = 2;  // d_i * 2 = d_j * 1
                    mji = 1;
                } else {
                    mij = 1;
                    mji = 2;
                }
                const long s = coin() ? 1 : -1;
                b(i, j) = s * mij;
                b(j, i) = -s * mji;
            }
        }
        return b;
    }

    /// Skew-symmetrizable with magnitudes in {0, 1, 2}; zero pairs with
    /// probability zero_prob.
    IntMatrix random_skew_symmetrizable(std::size_t n, double zero_prob) {
        IntMatrix b = random_dense_skew_symmetrizable(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                if (coin(zero_prob)) b(i, j) = b(j, i) = 0;
            }
        }
        return b;
    }

    Permutation random_permutation(std::size_t n) {
        std::vector<std::size_t> m(n);
        for (std::size_t i = 0; i < n; ++i) m[i] = i;
        std::shuffle(m.begin(), m.end(), rng_);
        return Permutation(std::move(m));
    }

private:
    std::mt19937_64 rng_;
};

/// Every 3x3 skew-symmetric-by-signs matrix with |b_ij| in {0, 1, 2}.
inline std::vector<IntMatrix> all_skew_sign_patterns_3x3() {
    // Per pair: both zero, or b_ij = s*m1, b_ji = -s*m2 with s = +-1 and m1, m2 in {1, 2}.
    std::vector<std::pair<long, long>> options{{0, 0}};
    for (long s : {1, -1}) {
        for (long m1 : {1, 2}) {
            for (long m2 : {1, 2}) options.emplace_back(s * m1, -s * m2);
        }
    }
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<IntMatrix> out;
    for (const auto& p : options) {
        for (const auto& q : options) {
            for (const auto& r : options) {
                IntMatrix b(3);
                const std::pair<long, long>* chosen[3] = {&p, &q, &r};
                for (int k = 0; k < 3; ++k) {
                    b(pairs[k][0], pairs[k][1]) = chosen[k]->first;
                    b(pairs[k][1], pairs[k][0]) = chosen[k]->second;
                }
                out.push_back(std::move(b));
            }
        }
    }
    return out;
}

/// Every 3x3 matrix with diagonal 2 whose off-diagonal pairs are both zero
/// or share a sign with magnitudes in {1, 2}.
inline std::vector<IntMatrix> all_quasi_cartan_sign_patterns_3x3() {
    std::vector<std::pair<long, long>> options{{0, 0}};
    for (long s : {1, -1}) {
        for (long m1 : {1, 2}) {
            for (long m2 : {1, 2}) options.emplace_back(s * m1, s * m2);
        }
    }
    const std::size_t pairs[3][2] = {{0, 1}, {0, 2}, {1, 2}};
    std::vector<IntMatrix> out;
    for (const auto& p : options) {
        for (const auto& q : options) {
            for (const auto& r : options) {
                IntMatrix c(3);
                const std::pair<long, long>* chosen[3] = {&p, &q, &r};
                for (int k = 0; k < 3; ++k) {
                    c(pairs[k][0], pairs[k][1]) = chosen[k]->first;
                    c(pairs[k][1], pairs[k][0]) = chosen[k]->second;
                }
                for (int i = 0; i < 3; ++i) c(i, i) = 2;
                out.push_back(std::move(c));
            }
        }
    }
    return out;
}

}  // namespace quasicartan::testing
