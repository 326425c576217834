#pragma once

// Schubert varieties in the Grassmannian G(d, N) indexed by strictly
// increasing words, Levi block compositions, Levi-Schubert quadruples and
// their reduction, and standard monomial counts.

#include <algorithm>
#include <compare>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spherical/errors.hpp"
#include "spherical/numeric.hpp"
#include "spherical/shapes.hpp"

namespace spherical {

/// A strictly increasing word 1 <= l_1 < ... < l_d <= N.
class GrassWord {
public:
    GrassWord() = default;
    GrassWord(std::vector<int> entries, int n) : entries_(std::move(entries)), n_(n) {
        if (n_ < 1) throw std::invalid_argument("word: N must be positive");
        if (entries_.empty()) throw std::invalid_argument("word: must have at least one entry");
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i] < 1 || entries_[i] > n_)
                throw std::invalid_argument("word: entry " + std::to_string(entries_[i]) + " outside 1.." + std::to_string(n_));
            if (i + 1 < entries_.size() && entries_[i] >= entries_[i + 1])
                throw std::invalid_argument("word: entries are not strictly increasing");
        }
    }

    const std::vector<int>& entries() const { return entries_; }
    int d() const { return static_cast<int>(entries_.size()); }
    int n() const { return n_; }
    int operator[](std::size_t i) const { return entries_[i]; }
    int first() const { return entries_.front(); }
    int last() const { return entries_.back(); }

    bool is_identity() const { return last() == d(); }

    friend bool operator==(const GrassWord&, const GrassWord&) = default;
    friend auto operator<=>(const GrassWord& a, const GrassWord& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    int n_ = 0;
};

/// Composition (N_1, ..., N_b) of N; block k is {j_{k-1}+1, ..., j_k}.
class LeviBlocks {
public:
    LeviBlocks() = default;
    explicit LeviBlocks(std::vector<int> sizes) : sizes_(std::move(sizes)) {
        if (sizes_.empty()) throw std::invalid_argument("blocks: need at least one block");
        for (int s : sizes_)
            if (s < 1) throw std::invalid_argument("blocks: every block size must be positive");
    }

    /// Composition whose boundaries j_1 < ... < j_{b-1} are the given roots.
    static LeviBlocks from_boundaries(const std::vector<int>& boundaries, int n) {
        std::vector<int> sizes;
        int prev = 0;
        for (int j : boundaries) {
            sizes.push_back(j - prev);
            prev = j;
        }
        sizes.push_back(n - prev);
        return LeviBlocks(std::move(sizes));
    }

    /// The maximal torus: N blocks of size one.
    static LeviBlocks torus(int n) { return LeviBlocks(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    const std::vector<int>& sizes() const { return sizes_; }
    int count() const { return static_cast<int>(sizes_.size()); }
    int n() const { return std::accumulate(sizes_.begin(), sizes_.end(), 0); }
    /// N_k, 1-based.
    int size(int k) const { return sizes_[static_cast<std::size_t>(k - 1)]; }

    /// j_k = N_1 + ... + N_k, with j_0 = 0.
    int boundary(int k) const {
        int j = 0;
        for (int i = 0; i < k; ++i) j += sizes_[static_cast<std::size_t>(i)];
        return j;
    }

    /// {j_1, ..., j_{b-1}}: the simple roots outside the Levi.
    std::vector<int> boundaries() const {
        std::vector<int> out;
        int j = 0;
        for (std::size_t i = 0; i + 1 < sizes_.size(); ++i) out.push_back(j += sizes_[i]);
        return out;
    }

    /// 1-based block containing value v.
    int block_of(int v) const {
        int j = 0;
        for (int k = 0; k < count(); ++k) {
            j += sizes_[static_cast<std::size_t>(k)];
            if (v <= j) return k + 1;
        }
        throw std::out_of_range("value outside 1..N");
    }

    friend bool operator==(const LeviBlocks&, const LeviBlocks&) = default;
    friend auto operator<=>(const LeviBlocks&, const LeviBlocks&) = default;

private:
    std::vector<int> sizes_;
};

/// Levi-Schubert quadruple (w, d, N, L); d and N are carried by the word.
class Quadruple {
public:
    Quadruple() = default;
    Quadruple(GrassWord w, LeviBlocks blocks) : w_(std::move(w)), blocks_(std::move(blocks)) {
        if (w_.d() >= w_.n()) throw std::invalid_argument("quadruple: need d < N");
        if (blocks_.n() != w_.n())
            throw std::invalid_argument("blocks: sizes sum to " + std::to_string(blocks_.n()) + " but N = " +
                                        std::to_string(w_.n()));
    }

    const GrassWord& w() const { return w_; }
    const LeviBlocks& blocks() const { return blocks_; }
    int d() const { return w_.d(); }
    int n() const { return w_.n(); }

    friend bool operator==(const Quadruple&, const Quadruple&) = default;
    friend auto operator<=>(const Quadruple&, const Quadruple&) = default;

private:
    GrassWord w_;
    LeviBlocks blocks_;
};

/// tau <= w in Bruhat order: componentwise comparison.
inline bool bruhat_leq(const GrassWord& tau, const GrassWord& w) {
    if (tau.d() != w.d() || tau.n() != w.n()) throw std::invalid_argument("bruhat_leq: words live in different Grassmannians");
    for (int i = 0; i < w.d(); ++i)
        if (tau[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(i)]) return false;
    return true;
}

/// Simple-root indices outside the largest standard parabolic stabilising
/// X(w): every l_m with l_m + 1 not in w, excluding N itself.
inline std::vector<int> stabilizer_roots(const GrassWord& w) {
    std::vector<int> out;
    for (int m = 0; m < w.d(); ++m) {
        const int l = w[static_cast<std::size_t>(m)];
        const bool next_in_w = m + 1 < w.d() && w[static_cast<std::size_t>(m) + 1] == l + 1;
        if (!next_in_w && l < w.n()) out.push_back(l);
    }
    return out;
}

/// Roots of w missing from the block boundaries of L.
inline std::vector<int> missing_boundary_roots(const GrassWord& w, const LeviBlocks& blocks) {
    const std::vector<int> have = blocks.boundaries();
    std::vector<int> missing;
    for (int r : stabilizer_roots(w))
        if (!std::binary_search(have.begin(), have.end(), r)) missing.push_back(r);
    return missing;
}

inline bool is_stable(const Quadruple& q) { return missing_boundary_roots(q.w(), q.blocks()).empty(); }

inline LeviBlocks maximal_levi(const GrassWord& w) { return LeviBlocks::from_boundaries(stabilizer_roots(w), w.n()); }

/// h_k = number of entries of w in block k.
inline std::vector<int> h_vector(const Quadruple& q) {
    std::vector<int> h(static_cast<std::size_t>(q.blocks().count()), 0);
    for (int l : q.w().entries()) ++h[static_cast<std::size_t>(q.blocks().block_of(l) - 1)];
    return h;
}

inline bool is_reduced(const GrassWord& w) { return w.first() != 1 && w.last() == w.n(); }
inline bool is_reduced(const Quadruple& q) { return is_reduced(q.w()); }

/// Length of the longest prefix with l_i = i.
inline int identity_prefix(const GrassWord& w) {
    int p = 0;
    while (p < w.d() && w[static_cast<std::size_t>(p)] == p + 1) ++p;
    return p;
}

/// Reduction (w-bar, d-bar, N-bar, L-bar): strip the identity prefix of length
/// p and everything above l_d, keeping the blocks strictly between.
inline Quadruple reduce(const Quadruple& q) {
    if (!is_stable(q)) throw std::invalid_argument("reduce: quadruple is not stable");
    const GrassWord& w = q.w();
    if (w.is_identity()) throw std::invalid_argument("reduce: identity word has no reduction");
    if (is_reduced(q)) return q;
    const int p = identity_prefix(w);
    const int top = w.last();
    std::vector<int> entries;
    for (int i = p; i < w.d(); ++i) entries.push_back(w[static_cast<std::size_t>(i)] - p);

    std::vector<int> sizes;
    int j = 0;
    for (int s : q.blocks().sizes()) {
        const int lo = j + 1, hi = j + s;
        j = hi;
        if (hi <= p || lo > top) continue;
        if (lo <= p || hi > top) throw invariant_violation("reduce: block straddles the reduction window");
        sizes.push_back(s);
    }
    return Quadruple(GrassWord(std::move(entries), top - p), LeviBlocks(std::move(sizes)));
}

/// H_w = {tau <= w}, lexicographic order.
inline std::vector<GrassWord> bruhat_interval(const GrassWord& w) {
    std::vector<GrassWord> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i == w.d()) {
            out.emplace_back(cur, w.n());
            return;
        }
        for (int v = lo; v <= w[static_cast<std::size_t>(i)]; ++v) {
            cur.push_back(v);
            self(self, i + 1, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0, 1);
    return out;
}

/// Every word of I_{d,N}, lexicographic order.
inline std::vector<GrassWord> all_words(int d, int n) {
    std::vector<int> top(static_cast<std::size_t>(d));
    std::iota(top.begin(), top.end(), n - d + 1);
    return bruhat_interval(GrassWord(std::move(top), n));
}

/// Every composition of n, in lexicographic order of the size vectors.
inline std::vector<LeviBlocks> all_compositions(int n) {
    std::vector<LeviBlocks> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int s = 1; s <= remaining; ++s) {
            cur.push_back(s);
            self(self, remaining - s);
            cur.pop_back();
        }
    };
    rec(rec, n);
    return out;
}

/// Number of standard monomials of degree r on X(w), i.e. chains
/// w >= tau_1 >= ... >= tau_r; this is dim C[X(w)]_r.
inline BigInt count_standard_monomials(const GrassWord& w, int r) {
    if (r < 0) throw std::invalid_argument("degree must be non-negative");
    if (r == 0) return 1;
    const std::vector<GrassWord> interval = bruhat_interval(w);
    const std::size_t n = interval.size();
    // below[i] lists every j with interval[j] <= interval[i].
    std::vector<std::vector<std::size_t>> below(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (bruhat_leq(interval[j], interval[i])) below[i].push_back(j);

    // chains[i] = number of chains of the current length ending (at the bottom) in interval[i]
    std::vector<BigInt> chains(n, BigInt(1));
    for (int len = 2; len <= r; ++len) {
        std::vector<BigInt> next(n, BigInt(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j : below[i]) next[j] += chains[i];
        chains = std::move(next);
    }
    BigInt total = 0;
    for (const auto& c : chains) total += c;
    return total;
}

inline GrassWord parse_word(std::string_view text, int n) {
    return GrassWord(detail::parse_int_list(text, "word", false), n);
}

inline LeviBlocks parse_blocks(std::string_view text) {
    return LeviBlocks(detail::parse_int_list(text, "blocks", false));
}

inline std::string to_string(const std::vector<int>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s + ")";
}

inline std::string to_string(const GrassWord& w) { return to_string(w.entries()); }
inline std::string to_string(const LeviBlocks& b) { return to_string(b.sizes()); }

}  // namespace spherical
