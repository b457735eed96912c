#pragma once

// Positivity of symmetrizable matrices via leading principal minors.

#include <quasicartan/matrix.hpp>

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

namespace quasicartan {

using DeterminantFn = std::function<BigInt(const IntMatrix&)>;

struct PositivityVerdict {
    bool positive = false;
    /// Smallest k (1-based) whose k x k leading minor is <= 0.
    std::optional<std::size_t> first_failure;
    /// minors[k-1] = det of the k x k leading block, for every k evaluated.
    std::vector<BigInt> minors;

    friend bool operator==(const PositivityVerdict&, const PositivityVerdict&) = default;
};

/// Leading minors for k = 1..n in ascending order, stopping at the first
/// one that is not strictly positive. Throws PreconditionError unless c is
/// symmetric by signs; the minor test only characterizes positivity for
/// symmetrizable matrices, which callers are expected to have checked.
PositivityVerdict is_positive(const IntMatrix& c);

/// As above with a caller-supplied determinant routine (evaluated exactly
/// once per leading minor).
PositivityVerdict is_positive(const IntMatrix& c, const DeterminantFn& det);

/// All 2^n - 1 principal minors strictly positive. Exponential; meant for
/// small n as an independent check of the leading-minor test.
bool all_principal_minors_positive(const IntMatrix& c);
bool all_principal_minors_positive(const IntMatrix& c, const DeterminantFn& det);

}  // namespace quasicartan
