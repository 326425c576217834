#pragma once

// Semistandard tableaux, the Littlewood-Richardson rule, skew Schur
// expansions and the multiplicity-free tests for skew Schur functions and
// skew Schur polynomials.

#include <algorithm>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "spherical/numeric.hpp"
#include "spherical/shapes.hpp"

namespace spherical {

/// A filling of a skew shape; entries[i] holds row i left to right.
struct Tableau {
    SkewShape shape;
    std::vector<std::vector<int>> entries;

    int at(int row, int col) const {
        return entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - shape.row_begin(row))];
    }

    bool is_semistandard() const {
        for (int i = 0; i < shape.rows(); ++i) {
            for (int j = shape.row_begin(i); j < shape.row_end(i); ++j) {
                if (at(i, j) < 1) return false;
                if (j + 1 < shape.row_end(i) && at(i, j) > at(i, j + 1)) return false;
                if (shape.has_cell(i + 1, j) && at(i, j) >= at(i + 1, j)) return false;
            }
        }
        return true;
    }

    /// nu_i = number of cells holding i (trailing zeros dropped).
    std::vector<int> weight() const {
        std::vector<int> w;
        for (const auto& row : entries)
            for (int v : row) {
                if (static_cast<int>(w.size()) < v) w.resize(static_cast<std::size_t>(v), 0);
                ++w[static_cast<std::size_t>(v - 1)];
            }
        return w;
    }

    friend bool operator==(const Tableau&, const Tableau&) = default;
};

/// Rows read left to right, bottom row first.
inline std::vector<int> row_word(const Tableau& t) {
    std::vector<int> word;
    for (auto it = t.entries.rbegin(); it != t.entries.rend(); ++it) word.insert(word.end(), it->begin(), it->end());
    return word;
}

/// Every suffix contains at least as many i's as (i+1)'s.
inline bool is_reverse_lattice(std::span<const int> word) {
    std::vector<int> seen;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        int v = *it;
        if (v < 1) return false;
        if (static_cast<int>(seen.size()) < v) seen.resize(static_cast<std::size_t>(v), 0);
        ++seen[static_cast<std::size_t>(v - 1)];
        if (v > 1 && seen[static_cast<std::size_t>(v - 1)] > seen[static_cast<std::size_t>(v - 2)]) return false;
    }
    return true;
}

namespace detail {

// Row-major backtracking over semistandard fillings with entries <= max_entry.
template <class Visit>
void for_each_ssyt(const SkewShape& shape, int max_entry, Visit&& visit) {
    const std::vector<Cell> cells = shape.cells();
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i) grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.row_end(i)), 0);

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            visit(grid);
            return;
        }
        const auto [i, j] = cells[idx];
        int lo = 1;
        if (shape.has_cell(i, j - 1)) lo = grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)];
        if (shape.has_cell(i - 1, j)) lo = std::max(lo, grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1);
        // Cells remaining below in this column need distinct larger values.
        int below = 0;
        while (shape.has_cell(i + below + 1, j)) ++below;
        for (int v = lo; v <= max_entry - below; ++v) {
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            self(self, idx + 1);
        }
    };
    rec(rec, 0);
}

// Backtracking over Littlewood-Richardson fillings. Cells are filled in the
// order of the reversed row word (top row first, each row right to left), so
// the lattice condition is checked incrementally. `cap`, when given, bounds the
// number of occurrences of each value.
template <class Visit>
void for_each_lr_filling(const SkewShape& shape, int max_value, const std::vector<int>* cap, Visit&& visit) {
    std::vector<Cell> order;
    for (int i = 0; i < shape.rows(); ++i)
        for (int j = shape.row_end(i) - 1; j >= shape.row_begin(i); --j) order.push_back({i, j});

    std::vector<std::vector<int>> grid(static_cast<std::size_t>(shape.rows()));
    for (int i = 0; i < shape.rows(); ++i) grid[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(shape.row_end(i)), 0);
    std::vector<int> counts(static_cast<std::size_t>(max_value) + 2, 0);
    int used = 0;  // largest value placed so far

    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == order.size()) {
            visit(std::span<const int>(counts.data() + 1, static_cast<std::size_t>(used)));
            return;
        }
        const auto [i, j] = order[idx];
        int lo = 1;
        if (shape.has_cell(i - 1, j)) lo = grid[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] + 1;
        int hi = std::min(max_value, used + 1);
        if (shape.has_cell(i, j + 1)) hi = std::min(hi, grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j + 1)]);
        for (int v = lo; v <= hi; ++v) {
            auto& c = counts[static_cast<std::size_t>(v)];
            if (v > 1 && c + 1 > counts[static_cast<std::size_t>(v - 1)]) continue;
            if (cap) {
                if (v > static_cast<int>(cap->size()) || c + 1 > (*cap)[static_cast<std::size_t>(v - 1)]) continue;
            }
            ++c;
            int saved_used = used;
            used = std::max(used, v);
            grid[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
            self(self, idx + 1);
            used = saved_used;
            --c;
        }
    };
    rec(rec, 0);
}

}  // namespace detail

/// Every semistandard tableau of `shape` with entries in {1..max_entry}, in
/// row-major lexicographic order.
inline std::vector<Tableau> enumerate_ssyt(const SkewShape& shape, int max_entry) {
    std::vector<Tableau> out;
    detail::for_each_ssyt(shape, max_entry, [&](const std::vector<std::vector<int>>& grid) {
        Tableau t{shape, {}};
        t.entries.resize(grid.size());
        for (int i = 0; i < shape.rows(); ++i) {
            const auto& g = grid[static_cast<std::size_t>(i)];
            t.entries[static_cast<std::size_t>(i)].assign(g.begin() + shape.row_begin(i), g.end());
        }
        out.push_back(std::move(t));
    });
    return out;
}

/// Same as enumerate_ssyt(shape, max_entry).size() without materialising.
inline Count count_ssyt(const SkewShape& shape, int max_entry) {
    Count n = 0;
    detail::for_each_ssyt(shape, max_entry, [&](const auto&) { n = checked_add(n, 1); });
    return n;
}

/// dim W^nu(C^n) by the hook-content formula.
inline BigInt weyl_dimension(const Partition& nu, int n) {
    if (nu.length() > n) return 0;
    BigInt num = 1, den = 1;
    const Partition conj = conjugate(nu);
    for (int i = 0; i < nu.length(); ++i)
        for (int j = 0; j < nu.part(i); ++j) {
            num *= (n + j - i);
            den *= (nu.part(i) - j - 1) + (conj.part(j) - i - 1) + 1;
        }
    return num / den;
}

/// c^lambda_{mu,nu}: number of LR tableaux of shape lambda/mu and weight nu.
inline Count lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (!lambda.contains(mu) || lambda.size() != mu.size() + nu.size()) return 0;
    Count n = 0;
    const std::vector<int>& cap = nu.vec();
    detail::for_each_lr_filling(SkewShape(lambda, mu), std::max(nu.length(), 1), &cap,
                                [&](std::span<const int>) { n = checked_add(n, 1); });
    return n;
}

/// Schur expansion sum_nu c_nu s_nu, keyed and serialised in lexicographic
/// order of nu.
struct Expansion {
    std::map<Partition, Count> terms;

    void add(const Partition& nu, Count c) {
        if (c == 0) return;
        auto& slot = terms[nu];
        slot = checked_add(slot, c);
    }

    Count multiplicity(const Partition& nu) const {
        auto it = terms.find(nu);
        return it == terms.end() ? 0 : it->second;
    }

    Count max_multiplicity() const {
        Count m = 0;
        for (const auto& [nu, c] : terms) m = std::max(m, c);
        return m;
    }

    bool multiplicity_free() const { return max_multiplicity() <= 1; }

    /// One "(nu): c" line per term.
    std::string to_text() const {
        std::string s;
        for (const auto& [nu, c] : terms) s += to_string(nu) + ": " + std::to_string(c) + "\n";
        return s;
    }

    friend bool operator==(const Expansion&, const Expansion&) = default;
};

namespace detail {
inline Expansion expand_bounded(const SkewShape& shape, int max_value) {
    Expansion e;
    if (shape.empty()) {
        e.add(Partition{}, 1);
        return e;
    }
    if (max_value <= 0) return e;
    std::map<std::vector<int>, Count> buckets;
    for_each_lr_filling(shape, max_value, nullptr, [&](std::span<const int> weight) {
        auto& slot = buckets[std::vector<int>(weight.begin(), weight.end())];
        slot = checked_add(slot, 1);
    });
    for (auto& [w, c] : buckets) e.add(Partition(w), c);
    return e;
}
}  // namespace detail

/// s_{lambda/mu} = sum_nu c^lambda_{mu nu} s_nu.
inline Expansion expand_skew_schur(const SkewShape& shape) {
    return detail::expand_bounded(shape, std::max(shape.size(), 1));
}

/// Expansion of the skew Schur polynomial in n_vars variables: only nu with
/// at most n_vars parts.
inline Expansion expand_skew_schur_poly(const SkewShape& shape, int n_vars) {
    return detail::expand_bounded(shape, n_vars);
}

/// Multiplicity-freeness of the skew Schur function by the Thomas-Yong
/// conditions on the basic form.
inline bool is_multfree_function(const SkewShape& shape) {
    const SkewShape b = basic_form(shape);
    if (b.empty()) return true;
    const Partition& lambda = b.outer();
    const Partition& mu = b.inner();
    const int m = lambda.first();
    const int n = lambda.length();
    const Partition sharp = complement(lambda, m, n);

    if (mu.empty() || sharp.empty()) return true;
    auto short_by = [&](const Partition& p) { return shortness(p, m, n); };
    auto rect_short = [&](const Partition& p, int s) { return is_rectangle(p) && short_by(p) == s; };

    if (rect_short(mu, 1) || rect_short(sharp, 1)) return true;
    if ((rect_short(mu, 2) && is_fat_hook(sharp)) || (rect_short(sharp, 2) && is_fat_hook(mu))) return true;
    if ((is_rectangle(mu) && is_fat_hook(sharp) && short_by(sharp) == 1) ||
        (is_rectangle(sharp) && is_fat_hook(mu) && short_by(mu) == 1))
        return true;
    if (is_rectangle(mu) && is_rectangle(sharp)) return true;
    return false;
}

namespace detail {
inline bool is_two_row_lemma_shape(const SkewShape& s, int n_vars) {
    const Partition& lam = s.outer();
    const Partition& mu = s.inner();
    if (lam.length() != n_vars + 2 || mu.length() != 2) return false;
    const int r = lam.part(0);
    for (int i = 0; i < n_vars; ++i)
        if (lam.part(i) != r) return false;
    const int p = lam.part(n_vars), q = lam.part(n_vars + 1);
    const int a = mu.part(0), b = mu.part(1);
    return 0 < b && b <= a && a < r && 0 < q && q <= p && p < r;
}
}  // namespace detail

/// True when `shape` or its basic form is (r^n, p, q)/(a, b) with
/// 0 < b <= a < r and 0 < q <= p < r.
inline bool matches_two_row_lemma(const SkewShape& shape, int n_vars) {
    return detail::is_two_row_lemma_shape(shape, n_vars) || detail::is_two_row_lemma_shape(basic_form(shape), n_vars);
}

/// Multiplicity-freeness of s_{lambda/mu}(x_1..x_n).
inline bool is_multfree_poly(const SkewShape& shape, int n_vars) {
    if (is_multfree_function(shape)) return true;
    if (matches_two_row_lemma(shape, n_vars)) return true;
    return expand_skew_schur_poly(shape, n_vars).multiplicity_free();
}

/// Memoised polynomial expansions keyed by (basic form, variable count).
class ExpansionCache {
public:
    const Expansion& poly(const SkewShape& shape, int n_vars) {
        SkewShape key = basic_form(shape);
        auto k = std::make_pair(std::move(key), n_vars);
        auto it = cache_.find(k);
        if (it != cache_.end()) return it->second;
        Expansion e = expand_skew_schur_poly(k.first, n_vars);
        return cache_.emplace(std::move(k), std::move(e)).first->second;
    }

    Count ssyt_count(const SkewShape& shape, int n_vars) {
        auto k = std::make_pair(basic_form(shape), n_vars);
        auto it = counts_.find(k);
        if (it != counts_.end()) return it->second;
        Count c = count_ssyt(k.first, n_vars);
        counts_.emplace(std::move(k), c);
        return c;
    }

private:
    std::map<std::pair<SkewShape, int>, Expansion> cache_;
    std::map<std::pair<SkewShape, int>, Count> counts_;
};

}  // namespace spherical
