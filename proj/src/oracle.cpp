#include <quasicartan/oracle.hpp>

#include <quasicartan/errors.hpp>

#include <string>
#include <vector>

namespace quasicartan::oracle {

namespace {

void require_at_most(const IntMatrix& a, std::size_t limit, const char* who) {
    if (a.size() > limit) {
        throw OracleLimitExceeded(std::string(who) + ": dimension " + std::to_string(a.size()) +
                                  " exceeds oracle limit " + std::to_string(limit));
    }
}

bool signs_match(const IntMatrix& a) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            if (i == j) continue;
            const bool both_zero = a(i, j) == 0 && a(j, i) == 0;
            if (!both_zero && !(a(i, j) * a(j, i) > 0)) return false;
        }
    }
    return true;
}

// Extends the path; cycles are reported once per rotation class by
// requiring the start to be the smallest vertex on the cycle.
bool cycles_balanced(const IntMatrix& a, std::vector<std::size_t>& path, std::vector<bool>& on_path) {
    const std::size_t start = path.front();
    const std::size_t last = path.back();
    for (std::size_t next = start; next < a.size(); ++next) {
        if (a(last, next) == 0) continue;
        if (next == start) {
            if (path.size() < 3) continue;
            BigInt forward = 1;
            BigInt backward = 1;
            for (std::size_t s = 0; s < path.size(); ++s) {
                const std::size_t u = path[s];
                const std::size_t v = path[(s + 1) % path.size()];
                forward *= a(u, v);
                backward *= a(v, u);
            }
            if (forward != backward) return false;
            continue;
        }
        if (on_path[next]) continue;
        on_path[next] = true;
        path.push_back(next);
        const bool ok = cycles_balanced(a, path, on_path);
        path.pop_back();
        on_path[next] = false;
        if (!ok) return false;
    }
    return true;
}

}  // namespace

bool cycle_symmetrizable(const IntMatrix& a) {
    require_at_most(a, cycle_limit, "cycle_symmetrizable");
    if (!signs_match(a)) return false;
    std::vector<bool> on_path(a.size(), false);
    for (std::size_t start = 0; start < a.size(); ++start) {
        std::vector<std::size_t> path{start};
        on_path[start] = true;
        const bool ok = cycles_balanced(a, path, on_path);
        on_path[start] = false;
        if (!ok) return false;
    }
    return true;
}

BigInt cofactor_determinant(const IntMatrix& a) {
    require_at_most(a, cofactor_limit, "cofactor_determinant");
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    BigInt total = 0;
    for (std::size_t col = 0; col < n; ++col) {
        if (a(0, col) == 0) continue;
        IntMatrix minor(n - 1);
        for (std::size_t r = 1; r < n; ++r) {
            for (std::size_t c = 0, mc = 0; c < n; ++c) {
                if (c == col) continue;
                minor(r - 1, mc++) = a(r, c);
            }
        }
        const BigInt term = a(0, col) * cofactor_determinant(minor);
        if (col % 2 == 0) {
            total += term;
        } else {
            total -= term;
        }
    }
    return total;
}

bool all_principal_minors_positive_cofactor(const IntMatrix& c) {
    require_at_most(c, cofactor_limit, "all_principal_minors_positive_cofactor");
    const std::size_t n = c.size();
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask & (1u << i)) keep.push_back(i);
        }
        IntMatrix sub(keep.size());
        for (std::size_t r = 0; r < keep.size(); ++r) {
            for (std::size_t s = 0; s < keep.size(); ++s) sub(r, s) = c(keep[r], keep[s]);
        }
        if (cofactor_determinant(sub) <= 0) return false;
    }
    return true;
}

CompanionResult exhaustive_companion(const IntMatrix& b) {
    require_at_most(b, exhaustive_companion_limit, "exhaustive_companion");
    const std::size_t n = b.size();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }

    CompanionResult result;
    for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
        IntMatrix c(n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                c(i, j) = i == j ? BigInt(2) : BigInt(b(i, j) < 0 ? -b(i, j) : b(i, j));
            }
        }
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (mask & (1u << p)) {
                const auto [i, j] = pairs[p];
                c(i, j) = -c(i, j);
                c(j, i) = -c(j, i);
            }
        }
        ++result.assignments_tried;
        if (cycle_symmetrizable(c) && all_principal_minors_positive_cofactor(c)) {
            result.found = true;
            result.companion = std::move(c);
            return result;
        }
    }
    return result;
}

}  // namespace quasicartan::oracle
