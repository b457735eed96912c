#include <quasicartan/symmetrize.hpp>

#include <list>
#include <stdexcept>

namespace quasicartan {

bool Symmetrizer::certifies(const IntMatrix& a) const {
    const std::size_t n = a.size();
    if (diag.size() != n) return false;
    for (const auto& d : diag) {
        if (sgn(d) <= 0) return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (kind == SymmetryKind::skew && sgn(a(i, i)) != 0) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            const Rational lhs = diag[i] * Rational(a(i, j));
            const Rational rhs = diag[j] * Rational(a(j, i));
            if (kind == SymmetryKind::symmetric ? lhs != rhs : lhs != -rhs) return false;
        }
    }
    return true;
}

Symmetrizer Symmetrizer::scaled(const Rational& factor) const {
    if (sgn(factor) <= 0) {
        throw std::invalid_argument("Symmetrizer::scaled: factor must be positive");
    }
    Symmetrizer out = *this;
    for (auto& d : out.diag) {
        d *= factor;
        d.canonicalize();
    }
    return out;
}

namespace {

// Worklist propagation shared by the symmetric and skew deciders. The
// symmetric case needs a_ij a_ji > 0 on nonzero pairs and assigns
// d_j = d_i a_ij / a_ji; the skew case needs b_ij b_ji < 0 and assigns
// d_j = -d_i b_ij / b_ji.
SymmetrizeOutcome propagate_and_check(const IntMatrix& a, SymmetryKind kind, SymmetrizeStats* stats) {
    const std::size_t n = a.size();
    const int required_sign = kind == SymmetryKind::symmetric ? 1 : -1;
    auto fail = [](FailureKind k, std::size_t i, std::size_t j) {
        SymmetrizeOutcome out;
        out.failure = SymmetrizeFailure{k, i, j};
        return out;
    };

    if (kind == SymmetryKind::skew) {
        for (std::size_t i = 0; i < n; ++i) {
            if (sgn(a(i, i)) != 0) return fail(FailureKind::nonzero_diagonal, i, i);
        }
    }

    // Zero means unassigned, as in the worklist formulation.
    std::vector<Rational> d(n, Rational(0));
    std::list<std::size_t> worklist;
    for (std::size_t i = 0; i < n; ++i) worklist.push_back(i);

    while (!worklist.empty()) {
        const std::size_t i = worklist.front();
        worklist.pop_front();
        if (sgn(d[i]) == 0) d[i] = 1;

        for (auto it = worklist.begin(); it != worklist.end();) {
            const std::size_t j = *it;
            auto next = std::next(it);
            if (stats) ++stats->pair_inspections;

            const int sij = sgn(a(i, j));
            const int sji = sgn(a(j, i));
            if (sij == 0 && sji == 0) {
                it = next;
                continue;
            }
            if (sij * sji != required_sign) return fail(FailureKind::sign_violation, i, j);

            worklist.splice(worklist.begin(), worklist, it);

            Rational ratio = d[i] * Rational(a(i, j)) / Rational(a(j, i));
            if (kind == SymmetryKind::skew) ratio = -ratio;
            ratio.canonicalize();
            if (sgn(d[j]) != 0) {
                if (d[j] != ratio) return fail(FailureKind::ratio_conflict, i, j);
            } else {
                d[j] = ratio;
            }
            it = next;
        }
    }

    Symmetrizer witness{std::move(d), kind};
    // Verification pass over every pair.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (stats) ++stats->pair_inspections;
            const Rational lhs = witness.diag[i] * Rational(a(i, j));
            const Rational rhs = witness.diag[j] * Rational(a(j, i));
            if (kind == SymmetryKind::symmetric ? lhs != rhs : lhs != -rhs) {
                return fail(FailureKind::ratio_conflict, i, j);
            }
        }
    }

    SymmetrizeOutcome out;
    out.symmetrizable = true;
    out.witness = std::move(witness);
    return out;
}

}  // namespace

SymmetrizeOutcome check_symmetrizable(const IntMatrix& a, SymmetrizeStats* stats) {
    return propagate_and_check(a, SymmetryKind::symmetric, stats);
}

SymmetrizeOutcome check_skew_symmetrizable(const IntMatrix& b, SymmetrizeStats* stats) {
    return propagate_and_check(b, SymmetryKind::skew, stats);
}

Symmetrizer find_symmetrizer(const IntMatrix& a, SymmetrizeStats* stats) {
    const std::size_t n = a.size();
    std::vector<Rational> d(n, Rational(0));
    std::size_t unassigned = n;
    std::list<std::size_t> worklist;
    for (std::size_t i = 0; i < n; ++i) worklist.push_back(i);

    while (unassigned != 0) {
        const std::size_t i = worklist.front();
        worklist.pop_front();
        if (sgn(d[i]) == 0) {
            d[i] = 1;
            --unassigned;
        }
        for (auto it = worklist.begin(); it != worklist.end() && unassigned != 0;) {
            const std::size_t j = *it;
            auto next = std::next(it);
            if (stats) ++stats->pair_inspections;
            // A pair with a non-positive product cannot carry a ratio; it only
            // occurs for input that is not symmetrizable and is skipped so the
            // result stays positive.
            if (sgn(a(j, i)) != 0 && sgn(a(i, j)) * sgn(a(j, i)) > 0) {
                worklist.splice(worklist.begin(), worklist, it);
                if (sgn(d[j]) == 0) {
                    d[j] = d[i] * Rational(a(i, j)) / Rational(a(j, i));
                    d[j].canonicalize();
                    --unassigned;
                }
            }
            it = next;
        }
    }
    return Symmetrizer{std::move(d), SymmetryKind::symmetric};
}

namespace {

void normalize_block(std::vector<Rational>& diag, const std::vector<std::size_t>& block) {
    if (block.empty()) return;
    BigInt denominator_lcm = 1;
    for (std::size_t v : block) {
        mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(),
                diag[v].get_den_mpz_t());
    }
    BigInt numerator_gcd = 0;
    for (std::size_t v : block) {
        const BigInt scaled = diag[v].get_num() * (denominator_lcm / diag[v].get_den());
        mpz_gcd(numerator_gcd.get_mpz_t(), numerator_gcd.get_mpz_t(), scaled.get_mpz_t());
    }
    for (std::size_t v : block) {
        const BigInt scaled = diag[v].get_num() * (denominator_lcm / diag[v].get_den());
        diag[v] = Rational(scaled / numerator_gcd);
    }
}

}  // namespace

Symmetrizer integer_normalize(const Symmetrizer& d) {
    ComponentPartition whole;
    whole.blocks.emplace_back();
    for (std::size_t i = 0; i < d.diag.size(); ++i) whole.blocks.front().push_back(i);
    return integer_normalize(d, whole);
}

Symmetrizer integer_normalize(const Symmetrizer& d, const ComponentPartition& blocks) {
    Symmetrizer out = d;
    for (const auto& block : blocks.blocks) {
        for (std::size_t v : block) {
            if (v >= out.diag.size()) {
                throw std::out_of_range("integer_normalize: partition does not match symmetrizer size");
            }
        }
        normalize_block(out.diag, block);
    }
    return out;
}

}  // namespace quasicartan
