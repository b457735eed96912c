#pragma once

// Exact square integer matrices and the structural operations the rest of
// the library is built on: sign predicates, principal submatrices,
// simultaneous permutations, direct sums, connectivity and determinants.
//
// Indices are 0-based in the C++ API. Every external format (text, JSON,
// diagnostics) is 1-based.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace quasicartan {

using BigInt = mpz_class;
using Rational = mpq_class;

class IntMatrix {
public:
    IntMatrix() = default;

    /// Zero matrix of dimension n.
    explicit IntMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    /// Row-wise construction; throws std::invalid_argument if not square.
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool empty() const noexcept { return n_ == 0; }

    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    /// Bounds-checked access; throws std::out_of_range.
    const BigInt& at(std::size_t i, std::size_t j) const;

    std::span<const BigInt> row(std::size_t i) const {
        return {entries_.data() + i * n_, n_};
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> entries_;
};

/// A bijection on {0..n-1}, applied as a simultaneous row/column permutation.
class Permutation {
public:
    /// Throws std::invalid_argument unless mapping is a bijection on {0..n-1}.
    explicit Permutation(std::vector<std::size_t> mapping);

    static Permutation identity(std::size_t n);
    static Permutation transposition(std::size_t n, std::size_t a, std::size_t b);

    std::size_t size() const noexcept { return mapping_.size(); }
    std::size_t operator()(std::size_t i) const { return mapping_[i]; }
    const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }

    Permutation inverse() const;

private:
    std::vector<std::size_t> mapping_;
};

/// Connected blocks of the graph i~j iff a_ij != 0 or a_ji != 0.
/// Blocks are sorted internally and ordered by their smallest index.
struct ComponentPartition {
    std::vector<std::vector<std::size_t>> blocks;

    bool connected() const noexcept { return blocks.size() <= 1; }

    /// Block index of every vertex.
    std::vector<std::size_t> block_of(std::size_t n) const;
};

bool is_symmetric(const IntMatrix& a);
bool is_symmetric_by_signs(const IntMatrix& a);
bool is_skew_symmetric_by_signs(const IntMatrix& b);

/// Rows and columns listed in keep, in the given order. Throws
/// std::out_of_range for an index >= n.
IntMatrix principal_submatrix(const IntMatrix& a, std::span<const std::size_t> keep);

/// A with row and column i removed.
IntMatrix remove_index(const IntMatrix& a, std::size_t i);

/// Top-left k x k block, 1 <= k <= n. Throws std::out_of_range otherwise.
IntMatrix leading_principal_submatrix(const IntMatrix& a, std::size_t k);

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b);

/// result(p(i), p(j)) = a(i, j). Throws std::invalid_argument on size mismatch.
IntMatrix permute(const IntMatrix& a, const Permutation& p);

/// Entrywise absolute value.
IntMatrix abs(const IntMatrix& a);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);

ComponentPartition connected_components(const IntMatrix& a);
bool is_connected(const IntMatrix& a);

/// Exact determinant by Bareiss fraction-free elimination, O(n^3)
/// arithmetic operations. The 0 x 0 determinant is 1.
BigInt determinant(const IntMatrix& a);

}  // namespace quasicartan
