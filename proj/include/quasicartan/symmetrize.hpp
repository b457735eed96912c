#pragma once

#include <quasicartan/matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace quasicartan {

enum class SymmetryKind { symmetric, skew };

/// Positive rational diagonal D. For kind == symmetric it certifies A when
/// D*A is symmetric (d_i a_ij = d_j a_ji); for kind == skew it certifies B
/// when D*B is skew-symmetric (d_i b_ij = -d_j b_ji).
struct Symmetrizer {
    std::vector<Rational> diag;
    SymmetryKind kind = SymmetryKind::symmetric;

    /// Entrywise check of the defining identity, exact in rationals.
    bool certifies(const IntMatrix& a) const;

    Symmetrizer scaled(const Rational& factor) const;
};

enum class FailureKind {
    sign_violation,    // a_ij, a_ji do not have the required sign pattern
    ratio_conflict,    // propagated d_j disagrees with the pair (i, j)
    nonzero_diagonal,  // skew case only: b_ii != 0 (i == j)
};

struct SymmetrizeFailure {
    FailureKind kind;
    std::size_t i;  // 0-based
    std::size_t j;
};

struct SymmetrizeOutcome {
    bool symmetrizable = false;
    std::optional<Symmetrizer> witness;       // present iff symmetrizable
    std::optional<SymmetrizeFailure> failure;  // present iff not symmetrizable
};

/// Instrumentation: number of (i, j) pairs inspected.
struct SymmetrizeStats {
    std::uint64_t pair_inspections = 0;
};

/// Decides symmetrizability with the move-to-front worklist propagation,
/// followed by a full verification pass. Theta(n^2) pair inspections.
SymmetrizeOutcome check_symmetrizable(const IntMatrix& a, SymmetrizeStats* stats = nullptr);

/// Constructs a symmetrizer for a matrix the caller knows to be
/// symmetrizable, stopping as soon as every d_i is assigned (Theta(n) pair
/// inspections in the best case). Input that is not symmetrizable gets some
/// positive diagonal consistent with the propagation order; it is not
/// verified.
Symmetrizer find_symmetrizer(const IntMatrix& a, SymmetrizeStats* stats = nullptr);

/// Skew analogue of check_symmetrizable: propagation d_j = -d_i b_ij / b_ji,
/// pairs must have b_ij b_ji < 0 or both be zero, and the diagonal must vanish.
SymmetrizeOutcome check_skew_symmetrizable(const IntMatrix& b, SymmetrizeStats* stats = nullptr);

/// Scales every entry by the lcm of denominators over the gcd of the
/// resulting numerators, giving the smallest positive integer symmetrizer
/// proportional to d.
Symmetrizer integer_normalize(const Symmetrizer& d);

/// Same, independently per block. Entries in different connected components
/// are unrelated, so each block is normalized on its own.
Symmetrizer integer_normalize(const Symmetrizer& d, const ComponentPartition& blocks);

}  // namespace quasicartan
