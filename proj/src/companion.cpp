#include <quasicartan/companion.hpp>

#include <quasicartan/errors.hpp>
#include <quasicartan/positivity.hpp>
#include <quasicartan/symmetrize.hpp>

#include <algorithm>
#include <array>
#include <stdexcept>

namespace quasicartan {

std::string_view to_string(FastPath f) {
    switch (f) {
        case FastPath::none: return "none";
        case FastPath::three_by_three: return "three_by_three";
        case FastPath::dense: return "dense";
        case FastPath::cplus_first: return "cplus_first";
        case FastPath::component_split: return "component_split";
    }
    return "none";
}

SignAssignment SignAssignment::all_positive(const IntMatrix& b) {
    SignAssignment x;
    for (std::size_t j = 0; j < b.size(); ++j) {
        for (std::size_t i = 0; i < j; ++i) {
            if (sgn(b(i, j)) != 0 || sgn(b(j, i)) != 0) {
                x.pairs.emplace_back(i, j);
                x.signs.push_back(1);
            }
        }
    }
    return x;
}

IntMatrix c_plus(const IntMatrix& b) {
    IntMatrix c = abs(b);
    for (std::size_t i = 0; i < c.size(); ++i) c(i, i) = 2;
    return c;
}

IntMatrix companion_from_signs(const IntMatrix& b, const SignAssignment& x) {
    if (x.pairs.size() != x.signs.size()) {
        throw std::invalid_argument("companion_from_signs: pairs and signs differ in length");
    }
    IntMatrix c = c_plus(b);
    for (std::size_t p = 0; p < x.pairs.size(); ++p) {
        const auto [i, j] = x.pairs[p];
        if (x.signs[p] < 0) {
            c(i, j) = -c(i, j);
            c(j, i) = -c(j, i);
        }
    }
    return c;
}

namespace {

bool all_off_diagonal_nonzero(const IntMatrix& b) {
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (i != j && sgn(b(i, j)) == 0) return false;
        }
    }
    return true;
}

// Depth-first enumeration of sign assignments over the nonzero pairs of one
// matrix. Leaves are visited in lexicographic order (+1 first); with pruning
// enabled, subtrees that cannot contain a positive candidate are skipped,
// which removes only non-positive leaves and so preserves the first hit.
class SignSearch {
public:
    SignSearch(const IntMatrix& b, bool prune, std::uint64_t budget)
        : b_(b), prune_(prune), budget_(budget), current_(c_plus(b)),
          pairs_(SignAssignment::all_positive(b).pairs) {
        if (prune_) index_triangles();
    }

    std::uint64_t tried() const { return tried_; }

    std::optional<IntMatrix> run() {
        if (prune_ && !sign_independent_bounds_hold()) {
            count();
            return std::nullopt;
        }
        if (descend(0)) return current_;
        return std::nullopt;
    }

private:
    void count() {
        if (tried_ >= budget_) throw SearchCapExceeded(budget_);
        ++tried_;
    }

    // |c_ij c_ji| and triangle magnitudes do not depend on the signs.
    bool sign_independent_bounds_hold() const {
        const std::size_t n = b_.size();
        const auto components = connected_components(b_);
        const auto owner = components.block_of(n);
        for (const auto& [i, j] : pairs_) {
            const BigInt product = ::abs(b_(i, j) * b_(j, i));
            const bool large_block = components.blocks[owner[i]].size() >= 3;
            if (product > 3 || (large_block && product > 2)) return false;
        }
        for (const auto& t : triangles_) {
            const auto [a, b, c] = t.vertices;
            if (::abs(b_(a, b) * b_(b, c) * b_(c, a)) > 2) return false;
            if (::abs(b_(b, a) * b_(c, b) * b_(a, c)) > 2) return false;
        }
        return true;
    }

    struct Triangle {
        std::array<std::size_t, 3> vertices;
        std::array<std::size_t, 3> pair_ids;
    };

    void index_triangles() {
        const std::size_t n = b_.size();
        std::vector<std::vector<std::ptrdiff_t>> id(n, std::vector<std::ptrdiff_t>(n, -1));
        for (std::size_t p = 0; p < pairs_.size(); ++p) {
            id[pairs_[p].first][pairs_[p].second] = static_cast<std::ptrdiff_t>(p);
        }
        closing_.assign(pairs_.size(), {});
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (id[a][b] < 0) continue;
                for (std::size_t c = b + 1; c < n; ++c) {
                    if (id[a][c] < 0 || id[b][c] < 0) continue;
                    Triangle t{{a, b, c},
                               {static_cast<std::size_t>(id[a][b]), static_cast<std::size_t>(id[a][c]),
                                static_cast<std::size_t>(id[b][c])}};
                    const std::size_t last = *std::max_element(t.pair_ids.begin(), t.pair_ids.end());
                    closing_[last].push_back(triangles_.size());
                    triangles_.push_back(t);
                }
            }
        }
        signs_.assign(pairs_.size(), 1);
    }

    // Rejects the partial assignment ending at pair p if a triangle closed by
    // p has a negative cycle product, or a leading block completed by p has
    // a non-positive determinant.
    bool partial_ok(std::size_t p) const {
        for (std::size_t t : closing_[p]) {
            const auto& ids = triangles_[t].pair_ids;
            if (signs_[ids[0]] * signs_[ids[1]] * signs_[ids[2]] < 0) return false;
        }
        const std::size_t column = pairs_[p].second;
        const std::size_t next_column = p + 1 < pairs_.size() ? pairs_[p + 1].second : b_.size();
        if (next_column != column) {
            for (std::size_t k = column + 1; k <= next_column; ++k) {
                if (sgn(determinant(leading_principal_submatrix(current_, k))) <= 0) return false;
            }
        }
        return true;
    }

    void set_sign(std::size_t p, int sign) {
        const auto [i, j] = pairs_[p];
        const BigInt ij = ::abs(b_(i, j));
        const BigInt ji = ::abs(b_(j, i));
        current_(i, j) = sign > 0 ? ij : BigInt(-ij);
        current_(j, i) = sign > 0 ? ji : BigInt(-ji);
        if (prune_) signs_[p] = sign;
    }

    bool descend(std::size_t p) {
        if (p == pairs_.size()) {
            count();
            return is_positive(current_).positive;
        }
        for (int sign : {1, -1}) {
            set_sign(p, sign);
            if (prune_ && !partial_ok(p)) {
                count();
                continue;
            }
            if (descend(p + 1)) return true;
        }
        set_sign(p, 1);
        return false;
    }

    const IntMatrix& b_;
    bool prune_;
    std::uint64_t budget_;
    std::uint64_t tried_ = 0;
    IntMatrix current_;
    std::vector<std::pair<std::size_t, std::size_t>> pairs_;
    std::vector<int> signs_;
    std::vector<Triangle> triangles_;
    std::vector<std::vector<std::size_t>> closing_;
};

CompanionResult search_connected_or_whole(const IntMatrix& b, const CompanionOptions& options) {
    CompanionResult result;
    if (options.cap == 0) throw SearchCapExceeded(0);

    const IntMatrix cplus = c_plus(b);
    result.assignments_tried = 1;
    const bool cplus_positive = is_positive(cplus).positive;

    if (options.fast_paths) {
        // Both cases are decided by C+ alone.
        std::optional<FastPath> decided_by_cplus;
        if (all_off_diagonal_nonzero(b)) {
            decided_by_cplus = FastPath::dense;
        } else if (b.size() == 3) {
            decided_by_cplus = FastPath::three_by_three;
        }
        if (decided_by_cplus) {
            result.fast_path = *decided_by_cplus;
            result.found = cplus_positive;
            if (cplus_positive) result.companion = cplus;
            return result;
        }
    }

    if (cplus_positive) {
        result.found = true;
        result.companion = cplus;
        result.fast_path = FastPath::cplus_first;
        return result;
    }

    SignSearch search(b, options.prune, options.cap - result.assignments_tried);
    try {
        result.companion = search.run();
    } catch (const SearchCapExceeded&) {
        throw SearchCapExceeded(options.cap);
    }
    result.assignments_tried += search.tried();
    result.found = result.companion.has_value();
    return result;
}

}  // namespace

CompanionResult find_positive_companion(const IntMatrix& b, const CompanionOptions& options) {
    if (!check_skew_symmetrizable(b).symmetrizable) {
        throw PreconditionError("find_positive_companion: matrix is not skew-symmetrizable");
    }

    if (options.fast_paths) {
        const auto components = connected_components(b);
        if (components.blocks.size() > 1) {
            CompanionResult result;
            result.fast_path = FastPath::component_split;
            IntMatrix assembled(b.size());
            for (const auto& block : components.blocks) {
                CompanionOptions sub_options = options;
                if (result.assignments_tried >= options.cap) throw SearchCapExceeded(options.cap);
                sub_options.cap = options.cap - result.assignments_tried;
                CompanionResult part;
                try {
                    part = search_connected_or_whole(principal_submatrix(b, block), sub_options);
                } catch (const SearchCapExceeded&) {
                    throw SearchCapExceeded(options.cap);
                }
                result.assignments_tried += part.assignments_tried;
                if (!part.found) return result;
                for (std::size_t r = 0; r < block.size(); ++r) {
                    for (std::size_t c = 0; c < block.size(); ++c) {
                        assembled(block[r], block[c]) = (*part.companion)(r, c);
                    }
                }
            }
            result.found = true;
            result.companion = std::move(assembled);
            return result;
        }
    }
    return search_connected_or_whole(b, options);
}

bool verify_companion(const IntMatrix& b, const IntMatrix& c) {
    if (b.size() != c.size()) {
        throw std::invalid_argument("verify_companion: dimension mismatch (" + std::to_string(b.size()) +
                                    " vs " + std::to_string(c.size()) + ")");
    }
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (c(i, i) != 2) return false;
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && ::abs(c(i, j)) != ::abs(b(i, j))) return false;
        }
    }
    if (!is_symmetric_by_signs(c)) return false;
    return is_positive(c).positive;
}

std::optional<std::string> companion_bound_violation(const IntMatrix& c) {
    const std::size_t n = c.size();
    const auto components = connected_components(c);
    const auto owner = components.block_of(n);
    auto at = [](std::size_t i, std::size_t j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const BigInt p = c(i, j) * c(j, i);
            if (p < 0 || p > 3) return "pair product c_ij*c_ji = " + p.get_str() + " at " + at(i, j);
            if (components.blocks[owner[i]].size() >= 3 && p > 2) {
                return "pair product " + p.get_str() + " > 2 inside a connected block at " + at(i, j);
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                const BigInt t = c(i, k) * c(k, j) * c(j, i);
                if (t < 0 || t > 2) {
                    return "triangle product c_ik*c_kj*c_ji = " + t.get_str() + " for (i,j,k) = (" +
                           std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                           std::to_string(k + 1) + ")";
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace quasicartan
