#pragma once

// Brute-force reference implementations. Deliberately slow and written
// from the definitions, sharing no code path with the routines they check.

#include <quasicartan/companion.hpp>
#include <quasicartan/matrix.hpp>

#include <cstddef>

namespace quasicartan::oracle {

inline constexpr std::size_t cycle_limit = 8;
inline constexpr std::size_t cofactor_limit = 8;
inline constexpr std::size_t exhaustive_companion_limit = 4;

/// Symmetric by signs, and for every simple cycle i1 -> i2 -> ... -> ik -> i1
/// with k >= 3 the forward and backward entry products agree. Throws
/// OracleLimitExceeded above cycle_limit.
bool cycle_symmetrizable(const IntMatrix& a);

/// First-row cofactor expansion. Throws OracleLimitExceeded above
/// cofactor_limit.
BigInt cofactor_determinant(const IntMatrix& a);

/// All nonempty principal minors positive, each by cofactor expansion.
bool all_principal_minors_positive_cofactor(const IntMatrix& c);

/// Every sign choice over every pair i < j (zero pairs included), keeping
/// candidates that are symmetrizable by the cycle criterion and have all
/// principal minors positive. Throws OracleLimitExceeded above
/// exhaustive_companion_limit.
CompanionResult exhaustive_companion(const IntMatrix& b);

}  // namespace quasicartan::oracle
