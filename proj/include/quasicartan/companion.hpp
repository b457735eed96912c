#pragma once

// Positive quasi-Cartan companions of skew-symmetrizable matrices.
//
// A quasi-Cartan companion C of B has c_ii = 2 and |c_ij| = |b_ij| off the
// diagonal, and is symmetrizable. Choosing one sign x per nonzero pair and
// setting c_ij = x |b_ij|, c_ji = x |b_ji| always yields a companion (it is
// symmetric by signs, and B's skew-symmetrizer symmetrizes it), so the
// search space is the set of sign assignments.

#include <quasicartan/matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quasicartan {

inline constexpr std::uint64_t default_search_cap = std::uint64_t{1} << 24;

enum class FastPath { none, three_by_three, dense, cplus_first, component_split };

std::string_view to_string(FastPath f);

struct CompanionOptions {
    /// Reject partial assignments that violate necessary conditions for
    /// positivity (pair and triangle product bounds, leading minors of
    /// completed blocks). Never changes the verdict or the reported
    /// companion.
    bool prune = true;
    /// Decide by C+ alone where that is complete (n <= 2, 3 x 3, dense B),
    /// and split disconnected B into connected components.
    bool fast_paths = true;
    /// Budget on assignments examined (complete candidates plus pruned
    /// partial assignments). Exceeding it throws SearchCapExceeded.
    std::uint64_t cap = default_search_cap;
};

struct CompanionResult {
    bool found = false;
    std::optional<IntMatrix> companion;
    std::uint64_t assignments_tried = 0;
    FastPath fast_path = FastPath::none;
};

/// One sign per unordered pair {i, j}, i < j, with b_ij != 0. Pairs are
/// ordered by column, then row: (0,1), (0,2), (1,2), (0,3), ... so that the
/// k x k leading block is fully determined once every pair with j < k is.
struct SignAssignment {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<int> signs;  // +1 or -1, parallel to pairs

    /// All +1 over the nonzero pairs of b.
    static SignAssignment all_positive(const IntMatrix& b);
};

/// |b_ij| off the diagonal, 2 on it.
IntMatrix c_plus(const IntMatrix& b);

/// c_ij = x |b_ij|, c_ji = x |b_ji|, c_ii = 2.
IntMatrix companion_from_signs(const IntMatrix& b, const SignAssignment& x);

/// Search for a positive quasi-Cartan companion. C+ is tried first, then
/// every sign assignment in lexicographic order (+1 before -1, pairs in
/// SignAssignment order); the first positive candidate is returned, so the
/// result is deterministic and identical with or without pruning.
///
/// Throws PreconditionError if b is not skew-symmetrizable and
/// SearchCapExceeded when the budget runs out before a decision.
CompanionResult find_positive_companion(const IntMatrix& b, const CompanionOptions& options = {});

/// Certificate check: c_ii = 2, |c_ij| = |b_ij| off the diagonal, c
/// symmetric by signs and all leading minors of c positive. Throws
/// std::invalid_argument on a dimension mismatch.
bool verify_companion(const IntMatrix& b, const IntMatrix& c);

/// Checks the necessary conditions every positive quasi-Cartan matrix
/// satisfies: 0 <= c_ij c_ji <= 3; c_ij c_ji <= 2 inside connected blocks
/// of size >= 3; 0 <= c_ik c_kj c_ji <= 2 for distinct i, j, k. Returns a
/// description of the first violation, if any.
std::optional<std::string> companion_bound_violation(const IntMatrix& c);

}  // namespace quasicartan
