#include <quasicartan/matrix.hpp>

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>

namespace quasicartan {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : n_(rows.size()), entries_() {
    entries_.reserve(n_ * n_);
    for (const auto& r : rows) {
        if (r.size() != n_) {
            throw std::invalid_argument("IntMatrix: rows must form a square matrix");
        }
        for (long v : r) {
            entries_.emplace_back(v);
        }
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1;
    }
    return m;
}

const BigInt& IntMatrix::at(std::size_t i, std::size_t j) const {
    if (i >= n_ || j >= n_) {
        throw std::out_of_range("IntMatrix::at: index (" + std::to_string(i + 1) + ", " +
                                std::to_string(j + 1) + ") outside " + std::to_string(n_) +
                                "x" + std::to_string(n_) + " matrix");
    }
    return (*this)(i, j);
}

Permutation::Permutation(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    std::vector<bool> seen(mapping_.size(), false);
    for (std::size_t v : mapping_) {
        if (v >= mapping_.size() || seen[v]) {
            throw std::invalid_argument("Permutation: mapping is not a bijection");
        }
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    return Permutation(std::move(m));
}

Permutation Permutation::transposition(std::size_t n, std::size_t a, std::size_t b) {
    std::vector<std::size_t> m(n);
    std::iota(m.begin(), m.end(), std::size_t{0});
    if (a >= n || b >= n) {
        throw std::out_of_range("Permutation::transposition: index out of range");
    }
    std::swap(m[a], m[b]);
    return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
    std::vector<std::size_t> inv(mapping_.size());
    for (std::size_t i = 0; i < mapping_.size(); ++i) {
        inv[mapping_[i]] = i;
    }
    return Permutation(std::move(inv));
}

std::vector<std::size_t> ComponentPartition::block_of(std::size_t n) const {
    std::vector<std::size_t> owner(n, 0);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        for (std::size_t v : blocks[b]) {
            owner[v] = b;
        }
    }
    return owner;
}

bool is_symmetric(const IntMatrix& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (a(i, j) != a(j, i)) return false;
        }
    }
    return true;
}

bool is_symmetric_by_signs(const IntMatrix& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sgn(a(i, j)) != sgn(a(j, i))) return false;
        }
    }
    return true;
}

bool is_skew_symmetric_by_signs(const IntMatrix& b) {
    const std::size_t n = b.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (sgn(b(i, i)) != 0) return false;
        for (std::size_t j = i + 1; j < n; ++j) {
            if (sgn(b(i, j)) != -sgn(b(j, i))) return false;
        }
    }
    return true;
}

IntMatrix principal_submatrix(const IntMatrix& a, std::span<const std::size_t> keep) {
    for (std::size_t k : keep) {
        if (k >= a.size()) {
            throw std::out_of_range("principal_submatrix: index " + std::to_string(k + 1) +
                                    " outside 1.." + std::to_string(a.size()));
        }
    }
    IntMatrix out(keep.size());
    for (std::size_t r = 0; r < keep.size(); ++r) {
        for (std::size_t c = 0; c < keep.size(); ++c) {
            out(r, c) = a(keep[r], keep[c]);
        }
    }
    return out;
}

IntMatrix remove_index(const IntMatrix& a, std::size_t i) {
    if (i >= a.size()) {
        throw std::out_of_range("remove_index: index out of range");
    }
    std::vector<std::size_t> keep;
    keep.reserve(a.size() - 1);
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (k != i) keep.push_back(k);
    }
    return principal_submatrix(a, keep);
}

IntMatrix leading_principal_submatrix(const IntMatrix& a, std::size_t k) {
    if (k < 1 || k > a.size()) {
        throw std::out_of_range("leading_principal_submatrix: size " + std::to_string(k) +
                                " outside 1.." + std::to_string(a.size()));
    }
    IntMatrix out(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            out(i, j) = a(i, j);
        }
    }
    return out;
}

IntMatrix direct_sum(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t m = a.size();
    IntMatrix out(m + b.size());
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            out(i, j) = a(i, j);
        }
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out(m + i, m + j) = b(i, j);
        }
    }
    return out;
}

IntMatrix permute(const IntMatrix& a, const Permutation& p) {
    if (p.size() != a.size()) {
        throw std::invalid_argument("permute: permutation size " + std::to_string(p.size()) +
                                    " does not match matrix size " + std::to_string(a.size()));
    }
    IntMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out(p(i), p(j)) = a(i, j);
        }
    }
    return out;
}

IntMatrix abs(const IntMatrix& a) {
    IntMatrix out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) {
            out(i, j) = ::abs(a(i, j));
        }
    }
    return out;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("multiply: dimension mismatch");
    }
    const std::size_t n = a.size();
    IntMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            if (sgn(a(i, k)) == 0) continue;
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

ComponentPartition connected_components(const IntMatrix& a) {
    const std::size_t n = a.size();
    ComponentPartition part;
    std::vector<bool> visited(n, false);
    for (std::size_t start = 0; start < n; ++start) {
        if (visited[start]) continue;
        std::vector<std::size_t> block;
        std::queue<std::size_t> frontier;
        frontier.push(start);
        visited[start] = true;
        while (!frontier.empty()) {
            const std::size_t v = frontier.front();
            frontier.pop();
            block.push_back(v);
            for (std::size_t w = 0; w < n; ++w) {
                if (visited[w] || w == v) continue;
                if (sgn(a(v, w)) != 0 || sgn(a(w, v)) != 0) {
                    visited[w] = true;
                    frontier.push(w);
                }
            }
        }
        std::sort(block.begin(), block.end());
        part.blocks.push_back(std::move(block));
    }
    return part;
}

bool is_connected(const IntMatrix& a) { return connected_components(a).connected(); }

BigInt determinant(const IntMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return BigInt(1);

    IntMatrix m = a;
    BigInt previous_pivot = 1;
    bool negate = false;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && sgn(m(swap_row, k)) == 0) ++swap_row;
            if (swap_row == n) return BigInt(0);
            for (std::size_t j = k; j < n; ++j) {
                swap(m(k, j), m(swap_row, j));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Exact by Sylvester's identity.
                BigInt t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), previous_pivot.get_mpz_t());
            }
        }
        previous_pivot = m(k, k);
    }

    BigInt det = m(n - 1, n - 1);
    if (negate) det = -det;
    return det;
}

}  // namespace quasicartan
