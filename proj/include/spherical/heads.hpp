#pragma once

// Degree-1 heads of type L, indexed by vectors m with Theta(m) the word
// that takes the top m_k values of each block, standard degree-r heads,
// their tableaux and the per-block skew shapes.

#include <algorithm>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spherical/grassmann.hpp"
#include "spherical/lr.hpp"
#include "spherical/numeric.hpp"
#include "spherical/shapes.hpp"

namespace spherical {

/// (m_1, ..., m_b) aligned with the Levi blocks.
struct HeadVector {
    std::vector<int> m;

    int total() const {
        int s = 0;
        for (int x : m) s += x;
        return s;
    }

    friend bool operator==(const HeadVector&, const HeadVector&) = default;
    friend auto operator<=>(const HeadVector&, const HeadVector&) = default;
};

/// (theta_1 >= ... >= theta_r); empty for degree 0.
struct StandardHead {
    std::vector<HeadVector> heads;

    int degree() const { return static_cast<int>(heads.size()); }

    friend bool operator==(const StandardHead&, const StandardHead&) = default;
    friend auto operator<=>(const StandardHead&, const StandardHead&) = default;
};

/// Labels the irreducible L-module W^{nu_1} (x) ... (x) W^{nu_b}.
struct IrrLabel {
    std::vector<Partition> nus;

    friend bool operator==(const IrrLabel&, const IrrLabel&) = default;
    friend auto operator<=>(const IrrLabel&, const IrrLabel&) = default;
};

inline std::string to_string(const IrrLabel& label) {
    std::string s = "(";
    for (std::size_t k = 0; k < label.nus.size(); ++k) {
        if (k) s += ", ";
        s += to_string(label.nus[k]);
    }
    return s + ")";
}

inline std::string to_string(const HeadVector& h) { return "Theta" + to_string(h.m); }

/// Theta(m): concatenation over k of (j_k - m_k + 1, ..., j_k).
inline std::vector<int> theta_word(const HeadVector& h, const LeviBlocks& blocks) {
    if (static_cast<int>(h.m.size()) != blocks.count()) throw std::invalid_argument("head vector length differs from block count");
    std::vector<int> out;
    int j = 0;
    for (int k = 0; k < blocks.count(); ++k) {
        j += blocks.sizes()[static_cast<std::size_t>(k)];
        for (int v = j - h.m[static_cast<std::size_t>(k)] + 1; v <= j; ++v) out.push_back(v);
    }
    return out;
}

inline GrassWord theta_grass_word(const HeadVector& h, const LeviBlocks& blocks) {
    return GrassWord(theta_word(h, blocks), blocks.n());
}

namespace detail {
inline void require_stable_reduced(const Quadruple& q, const char* who) {
    if (!is_stable(q)) throw std::invalid_argument(std::string(who) + ": quadruple is not stable");
    if (!is_reduced(q)) throw std::invalid_argument(std::string(who) + ": quadruple is not reduced");
}
}  // namespace detail

/// Head criterion: sum m = d, m_k <= N_k, and prefix sums of m dominate
/// those of the h-vector.
inline bool is_head(const HeadVector& h, const Quadruple& q) {
    const LeviBlocks& blocks = q.blocks();
    if (static_cast<int>(h.m.size()) != blocks.count()) return false;
    const std::vector<int> hv = h_vector(q);
    int sum_m = 0, sum_h = 0;
    for (int k = 0; k < blocks.count(); ++k) {
        const int mk = h.m[static_cast<std::size_t>(k)];
        if (mk < 0 || mk > blocks.sizes()[static_cast<std::size_t>(k)]) return false;
        sum_m += mk;
        sum_h += hv[static_cast<std::size_t>(k)];
        if (sum_m < sum_h) return false;
    }
    return sum_m == q.d();
}

/// All degree-1 heads of type L, lexicographic in m.
inline std::vector<HeadVector> enumerate_heads(const Quadruple& q) {
    detail::require_stable_reduced(q, "enumerate_heads");
    const LeviBlocks& blocks = q.blocks();
    const std::vector<int> hv = h_vector(q);
    const int b = blocks.count();
    std::vector<HeadVector> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int k, int sum_m, int sum_h) -> void {
        if (k == b) {
            if (sum_m == q.d()) out.push_back(HeadVector{cur});
            return;
        }
        const int hk = hv[static_cast<std::size_t>(k)];
        const int cap = std::min(blocks.sizes()[static_cast<std::size_t>(k)], q.d() - sum_m);
        for (int mk = 0; mk <= cap; ++mk) {
            if (sum_m + mk < sum_h + hk) continue;
            cur.push_back(mk);
            self(self, k + 1, sum_m + mk, sum_h + hk);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0, 0);
    return out;
}

/// Theta(a) <= Theta(b) in Bruhat order iff the prefix sums of a dominate
/// those of b.
inline bool head_leq(const HeadVector& a, const HeadVector& b) {
    if (a.m.size() != b.m.size()) throw std::invalid_argument("head_leq: head vectors of different length");
    int sa = 0, sb = 0;
    for (std::size_t k = 0; k < a.m.size(); ++k) {
        sa += a.m[k];
        sb += b.m[k];
        if (sa < sb) return false;
    }
    return true;
}

/// All weakly decreasing r-tuples of degree-1 heads, lexicographic on the
/// tuple. Degree 0 yields the single empty head.
inline std::vector<StandardHead> enumerate_standard_heads(const Quadruple& q, int r) {
    if (r < 0) throw std::invalid_argument("degree must be non-negative");
    const std::vector<HeadVector> heads = enumerate_heads(q);
    // leq[i] lists j with heads[j] <= heads[i]
    std::vector<std::vector<std::size_t>> leq(heads.size());
    for (std::size_t i = 0; i < heads.size(); ++i)
        for (std::size_t j = 0; j < heads.size(); ++j)
            if (head_leq(heads[j], heads[i])) leq[i].push_back(j);

    std::vector<StandardHead> out;
    StandardHead cur;
    auto rec = [&](auto&& self, const std::vector<std::size_t>& candidates) -> void {
        if (cur.degree() == r) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j : candidates) {
            cur.heads.push_back(heads[j]);
            self(self, leq[j]);
            cur.heads.pop_back();
        }
    };
    std::vector<std::size_t> all(heads.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    rec(rec, all);
    return out;
}

/// Tableau of shape (r^d) whose column c, top to bottom, is theta_{r-c+1}.
inline Tableau head_tableau(const StandardHead& s, const LeviBlocks& blocks) {
    const int r = s.degree();
    if (r == 0) return Tableau{};
    std::vector<std::vector<int>> words;
    for (const auto& h : s.heads) words.push_back(theta_word(h, blocks));
    const int d = static_cast<int>(words.front().size());
    Tableau t{SkewShape(Partition::rectangle(r, d)), {}};
    t.entries.assign(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(r)));
    for (int c = 0; c < r; ++c) {
        const auto& col = words[static_cast<std::size_t>(r - 1 - c)];
        if (static_cast<int>(col.size()) != d) throw std::invalid_argument("head_tableau: heads of different length");
        for (int i = 0; i < d; ++i) t.entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = col[static_cast<std::size_t>(i)];
    }
    return t;
}

/// Shape of the basic sub-tableau of entries lying in each block.
inline std::vector<SkewShape> block_shapes(const StandardHead& s, const LeviBlocks& blocks) {
    const int b = blocks.count();
    std::vector<SkewShape> out;
    out.reserve(static_cast<std::size_t>(b));
    if (s.degree() == 0) {
        out.resize(static_cast<std::size_t>(b));
        return out;
    }
    const Tableau t = head_tableau(s, blocks);
    // In a semistandard tableau the cells with values <= j form a partition.
    auto cells_at_most = [&](int j) {
        std::vector<int> rows;
        for (const auto& row : t.entries)
            rows.push_back(static_cast<int>(std::upper_bound(row.begin(), row.end(), j) - row.begin()));
        return Partition(std::move(rows));
    };
    Partition lower = cells_at_most(0);
    int j = 0;
    for (int k = 0; k < b; ++k) {
        j += blocks.sizes()[static_cast<std::size_t>(k)];
        Partition upper = cells_at_most(j);
        out.push_back(basic_form(SkewShape(upper, lower)));
        lower = std::move(upper);
    }
    return out;
}

/// dim W_theta = prod_k #SSYT(block shape k, entries <= N_k).
inline BigInt head_module_dim(const StandardHead& s, const LeviBlocks& blocks) {
    BigInt dim = 1;
    const std::vector<SkewShape> shapes = block_shapes(s, blocks);
    for (int k = 0; k < blocks.count(); ++k) dim *= count_ssyt(shapes[static_cast<std::size_t>(k)], blocks.size(k + 1));
    return dim;
}

inline std::string to_string(const StandardHead& s, const LeviBlocks& blocks) {
    std::string vec, words;
    for (std::size_t i = 0; i < s.heads.size(); ++i) {
        if (i) {
            vec += ", ";
            words += ", ";
        }
        vec += to_string(s.heads[i]);
        words += to_string(theta_word(s.heads[i], blocks));
    }
    return "[" + vec + "] = [" + words + "]";
}

}  // namespace spherical
