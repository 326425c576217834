#pragma once

// Partitions, skew diagrams and the shape-level operations used by the
// multiplicity-free tests: conjugate, m^n-complement, m^n-shortness,
// basic form, pi-rotation and the rectangle / hook / fat hook predicates.

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace spherical {

class Partition {
public:
    Partition() = default;

    /// Trailing zeros are stripped. Throws std::invalid_argument on a negative
    /// or increasing sequence.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 0)
                throw std::invalid_argument("partition has a negative part");
            if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
                throw std::invalid_argument("partition parts are not weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (a^b) repeated b times.
    static Partition rectangle(int a, int b) {
        return Partition(std::vector<int>(static_cast<std::size_t>(std::max(b, 0)), a));
    }

    std::span<const int> parts() const { return parts_; }
    const std::vector<int>& vec() const { return parts_; }

    int length() const { return static_cast<int>(parts_.size()); }
    int size() const {
        int s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }
    int first() const { return parts_.empty() ? 0 : parts_.front(); }

    /// 0-based part access, zero past the end.
    int part(int i) const {
        return (i >= 0 && i < length()) ? parts_[static_cast<std::size_t>(i)] : 0;
    }

    bool contains(const Partition& mu) const {
        if (mu.length() > length()) return false;
        for (int i = 0; i < mu.length(); ++i)
            if (mu.part(i) > part(i)) return false;
        return true;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
};

struct Cell {
    int row;  // 0-based
    int col;  // 0-based
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(Partition outer, Partition inner = {})
        : outer_(std::move(outer)), inner_(std::move(inner)) {
        if (!outer_.contains(inner_))
            throw std::invalid_argument("inner partition is not contained in the outer partition");
    }

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int rows() const { return outer_.length(); }
    int size() const { return outer_.size() - inner_.size(); }
    bool empty() const { return size() == 0; }
    bool is_straight() const { return inner_.empty(); }

    int row_begin(int i) const { return inner_.part(i); }
    int row_end(int i) const { return outer_.part(i); }
    int row_length(int i) const { return row_end(i) - row_begin(i); }

    bool has_cell(int row, int col) const {
        return row >= 0 && row < rows() && col >= row_begin(row) && col < row_end(row);
    }

    std::vector<Cell> cells() const {
        std::vector<Cell> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int i = 0; i < rows(); ++i)
            for (int j = row_begin(i); j < row_end(i); ++j) out.push_back({i, j});
        return out;
    }

    friend bool operator==(const SkewShape&, const SkewShape&) = default;
    friend auto operator<=>(const SkewShape& a, const SkewShape& b) {
        if (auto c = a.outer_ <=> b.outer_; c != 0) return c;
        return a.inner_ <=> b.inner_;
    }

private:
    Partition outer_;
    Partition inner_;
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<int> out(static_cast<std::size_t>(lambda.first()), 0);
    for (int p : lambda.parts())
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

inline bool fits_in_box(const Partition& lambda, int m, int n) {
    return lambda.length() <= n && lambda.first() <= m;
}

namespace detail {
inline void require_box(const Partition& lambda, int m, int n) {
    if (m <= 0 || n <= 0) throw std::invalid_argument("box dimensions must be positive");
    if (!fits_in_box(lambda, m, n))
        throw std::invalid_argument("partition does not fit in the m x n box");
}
}  // namespace detail

/// m^n-complement: (m - lambda_n, ..., m - lambda_1).
inline Partition complement(const Partition& lambda, int m, int n) {
    detail::require_box(lambda, m, n);
    std::vector<int> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = m - lambda.part(n - 1 - i);
    return Partition(std::move(out));
}

/// m^n-shortness: shortest maximal straight segment of the SW -> NE lattice
/// path in the m x n box that traces the bottom and right contour of lambda.
inline int shortness(const Partition& lambda, int m, int n) {
    detail::require_box(lambda, m, n);
    // Path read bottom-to-top: R^{lambda_n}, U, R^{lambda_{n-1}-lambda_n}, U, ..., U, R^{m-lambda_1}.
    std::vector<char> steps;
    steps.reserve(static_cast<std::size_t>(m + n));
    int prev = 0;
    for (int i = n - 1; i >= 0; --i) {
        steps.insert(steps.end(), static_cast<std::size_t>(lambda.part(i) - prev), 'R');
        steps.push_back('U');
        prev = lambda.part(i);
    }
    steps.insert(steps.end(), static_cast<std::size_t>(m - prev), 'R');

    int best = m + n;
    std::size_t i = 0;
    while (i < steps.size()) {
        std::size_t j = i;
        while (j < steps.size() && steps[j] == steps[i]) ++j;
        best = std::min(best, static_cast<int>(j - i));
        i = j;
    }
    return best;
}

/// Drops every empty row and empty column, keeping the cell pattern.
inline SkewShape basic_form(const SkewShape& s) {
    if (s.empty()) return {};
    const int width = s.outer().first();
    std::vector<bool> col_used(static_cast<std::size_t>(width), false);
    for (int i = 0; i < s.rows(); ++i)
        for (int j = s.row_begin(i); j < s.row_end(i); ++j) col_used[static_cast<std::size_t>(j)] = true;

    // used_before[j] = number of nonempty columns among 0..j-1
    std::vector<int> used_before(static_cast<std::size_t>(width) + 1, 0);
    for (int j = 0; j < width; ++j)
        used_before[static_cast<std::size_t>(j) + 1] =
            used_before[static_cast<std::size_t>(j)] + (col_used[static_cast<std::size_t>(j)] ? 1 : 0);

    std::vector<int> outer, inner;
    for (int i = 0; i < s.rows(); ++i) {
        if (s.row_length(i) == 0) continue;
        outer.push_back(used_before[static_cast<std::size_t>(s.row_end(i))]);
        inner.push_back(used_before[static_cast<std::size_t>(s.row_begin(i))]);
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

inline bool is_basic(const SkewShape& s) { return basic_form(s) == s; }

/// Rotation through pi inside the lambda_1 x l(lambda) bounding box.
inline SkewShape rotate_pi(const SkewShape& s) {
    const int m = s.outer().first();
    const int n = s.outer().length();
    std::vector<int> outer(static_cast<std::size_t>(n)), inner(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        outer[static_cast<std::size_t>(i)] = m - s.inner().part(n - 1 - i);
        inner[static_cast<std::size_t>(i)] = m - s.outer().part(n - 1 - i);
    }
    return SkewShape(Partition(std::move(outer)), Partition(std::move(inner)));
}

enum class ShapeClass { zero, rectangle, hook, fat_hook, other };

inline int distinct_parts(const Partition& lambda) {
    return static_cast<int>(std::set<int>(lambda.parts().begin(), lambda.parts().end()).size());
}

inline bool is_rectangle(const Partition& lambda) {
    return !lambda.empty() && distinct_parts(lambda) == 1;
}

inline bool is_hook(const Partition& lambda) {
    if (lambda.empty()) return false;
    for (int i = 1; i < lambda.length(); ++i)
        if (lambda.part(i) != 1) return false;
    return true;
}

// At most two distinct part sizes; rectangles and hooks qualify.
inline bool is_fat_hook(const Partition& lambda) {
    return !lambda.empty() && distinct_parts(lambda) <= 2;
}

inline ShapeClass shape_class(const Partition& lambda) {
    if (lambda.empty()) return ShapeClass::zero;
    if (is_rectangle(lambda)) return ShapeClass::rectangle;
    if (is_hook(lambda)) return ShapeClass::hook;
    if (is_fat_hook(lambda)) return ShapeClass::fat_hook;
    return ShapeClass::other;
}

inline std::string_view to_string(ShapeClass c) {
    switch (c) {
        case ShapeClass::zero: return "zero";
        case ShapeClass::rectangle: return "rectangle";
        case ShapeClass::hook: return "hook";
        case ShapeClass::fat_hook: return "fat_hook";
        case ShapeClass::other: return "other";
    }
    return "other";
}

// ---------------------------------------------------------------------------
// Text syntax: "4,2,2,1", exponent form "3^2,1", "-" or "" for the empty
// partition; skew shapes as "outer/inner".

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline int parse_nonneg(std::string_view tok, std::string_view what) {
    tok = trim(tok);
    if (tok.empty()) throw std::invalid_argument(std::string(what) + ": empty entry");
    int v = 0;
    for (char c : tok) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw std::invalid_argument(std::string(what) + ": '" + std::string(tok) + "' is not a number");
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw std::invalid_argument(std::string(what) + ": entry too large");
    }
    return v;
}

/// Comma-separated integers; entries may use a^b exponent form when allowed.
inline std::vector<int> parse_int_list(std::string_view text, std::string_view what, bool exponents) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '(' && text.back() == ')') text = trim(text.substr(1, text.size() - 2));
    std::vector<int> out;
    if (text.empty() || text == "-") return out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = text.find(',', pos);
        std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t caret = tok.find('^');
        if (caret != std::string_view::npos) {
            if (!exponents) throw std::invalid_argument(std::string(what) + ": exponent form not allowed");
            int base = parse_nonneg(tok.substr(0, caret), what);
            int reps = parse_nonneg(tok.substr(caret + 1), what);
            out.insert(out.end(), static_cast<std::size_t>(reps), base);
        } else {
            out.push_back(parse_nonneg(tok, what));
        }
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace detail

inline Partition parse_partition(std::string_view text) {
    return Partition(detail::parse_int_list(text, "partition", true));
}

inline SkewShape parse_skew(std::string_view text) {
    std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
    return SkewShape(parse_partition(text.substr(0, slash)), parse_partition(text.substr(slash + 1)));
}

/// Comma list without brackets, "-" for the empty partition (inverse of parse_partition).
inline std::string to_arg(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    return s;
}

inline std::string to_string(const Partition& p) {
    std::string s = "(";
    for (int i = 0; i < p.length(); ++i) {
        if (i) s += ',';
        s += std::to_string(p.part(i));
    }
    return s + ")";
}

inline std::string to_string(const SkewShape& s) {
    return to_string(s.outer()) + "/" + to_string(s.inner());
}

/// All partitions of n in lexicographically decreasing order.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

/// All partitions contained in lambda (including the empty one and lambda).
inline std::vector<Partition> subpartitions(const Partition& lambda) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int row, int cap) -> void {
        out.emplace_back(cur);
        if (row >= lambda.length()) return;
        for (int p = 1; p <= std::min(cap, lambda.part(row)); ++p) {
            cur.push_back(p);
            self(self, row + 1, p);
            cur.pop_back();
        }
    };
    rec(rec, 0, lambda.first());
    return out;
}

}  // namespace spherical
