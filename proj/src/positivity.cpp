#include <quasicartan/positivity.hpp>

#include <quasicartan/errors.hpp>

#include <stdexcept>

namespace quasicartan {

PositivityVerdict is_positive(const IntMatrix& c) {
    return is_positive(c, [](const IntMatrix& m) { return determinant(m); });
}

PositivityVerdict is_positive(const IntMatrix& c, const DeterminantFn& det) {
    if (!is_symmetric_by_signs(c)) {
        throw PreconditionError("is_positive: matrix is not symmetric by signs, so it is not symmetrizable");
    }
    PositivityVerdict verdict;
    verdict.minors.reserve(c.size());
    for (std::size_t k = 1; k <= c.size(); ++k) {
        BigInt minor = det(leading_principal_submatrix(c, k));
        const bool ok = sgn(minor) > 0;
        verdict.minors.push_back(std::move(minor));
        if (!ok) {
            verdict.first_failure = k;
            return verdict;
        }
    }
    verdict.positive = true;
    return verdict;
}

bool all_principal_minors_positive(const IntMatrix& c) {
    return all_principal_minors_positive(c, [](const IntMatrix& m) { return determinant(m); });
}

bool all_principal_minors_positive(const IntMatrix& c, const DeterminantFn& det) {
    const std::size_t n = c.size();
    if (n >= 8 * sizeof(unsigned long long) - 1) {
        throw std::length_error("all_principal_minors_positive: dimension too large for subset enumeration");
    }
    std::vector<std::size_t> keep;
    for (unsigned long long mask = 1; mask < (1ULL << n); ++mask) {
        keep.clear();
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1ULL << i)) keep.push_back(i);
        }
        if (sgn(det(principal_submatrix(c, keep))) <= 0) return false;
    }
    return true;
}

}  // namespace quasicartan
