#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <utility>

#include "spherical/shapes.hpp"

using namespace spherical;

namespace {

Partition P(std::vector<int> v) { return Partition(std::move(v)); }

// Cells as (row, col) pairs, translated so the top-left occupied row/col is 0.
std::set<std::pair<int, int>> normalized_cells(const SkewShape& s) {
    std::set<std::pair<int, int>> out;
    int r0 = 1 << 20, c0 = 1 << 20;
    for (const Cell& c : s.cells()) {
        r0 = std::min(r0, c.row);
        c0 = std::min(c0, c.col);
    }
    for (const Cell& c : s.cells()) out.insert({c.row - r0, c.col - c0});
    return out;
}

// Cell set with empty rows and columns deleted.
std::set<std::pair<int, int>> squeezed_cells(const SkewShape& s) {
    std::set<int> rows, cols;
    for (const Cell& c : s.cells()) rows.insert(c.row), cols.insert(c.col);
    auto rank = [](const std::set<int>& xs, int x) { return static_cast<int>(std::distance(xs.begin(), xs.find(x))); };
    std::set<std::pair<int, int>> out;
    for (const Cell& c : s.cells()) out.insert({rank(rows, c.row), rank(cols, c.col)});
    return out;
}

// Boundary path of lambda in the m x n box, written out step by step.
int shortness_oracle(const Partition& lam, int m, int n) {
    std::string path;
    int col = 0;
    for (int i = n - 1; i >= 0; --i) {
        path += std::string(static_cast<std::size_t>(lam.part(i) - col), 'R');
        col = lam.part(i);
        path += 'U';
    }
    path += std::string(static_cast<std::size_t>(m - col), 'R');
    int best = 1 << 20, run = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        run = (i > 0 && path[i] == path[i - 1]) ? run + 1 : 1;
        if (i + 1 == path.size() || path[i + 1] != path[i]) best = std::min(best, run);
    }
    return best;
}

}  // namespace

TEST(Partition, StripsZerosAndRejectsIncreasing) {
    EXPECT_EQ(P({3, 1, 0, 0}), P({3, 1}));
    EXPECT_EQ(P({3, 1}).size(), 4);
    EXPECT_THROW(P({1, 2}), std::invalid_argument);
    EXPECT_THROW(P({2, -1}), std::invalid_argument);
}

TEST(Partition, Conjugate) {
    EXPECT_EQ(conjugate(P({4, 2, 2, 1})), P({4, 3, 1, 1}));
    EXPECT_EQ(conjugate(Partition{}), Partition{});
    EXPECT_EQ(conjugate(P({3})), P({1, 1, 1}));
    for (int n = 0; n <= 9; ++n)
        for (const auto& lam : partitions_of(n)) EXPECT_EQ(conjugate(conjugate(lam)), lam);
}

TEST(Partition, Complement) {
    EXPECT_EQ(complement(P({4, 2, 2, 1}), 4, 4), P({3, 2, 2}));
    EXPECT_EQ(complement(Partition::rectangle(3, 2), 3, 2), Partition{});
    EXPECT_EQ(complement(P({2, 2}), 4, 4), P({4, 4, 2, 2}));
    EXPECT_THROW(complement(P({5}), 4, 4), std::invalid_argument);
    for (int n = 0; n <= 8; ++n)
        for (const auto& lam : partitions_of(n))
            if (fits_in_box(lam, 4, 4)) {
                EXPECT_EQ(complement(complement(lam, 4, 4), 4, 4), lam);
                EXPECT_EQ(complement(lam, 4, 4).size(), 16 - lam.size());
            }
}

TEST(Partition, Shortness) {
    EXPECT_EQ(shortness(P({4, 2, 2, 1}), 4, 4), 1);
    EXPECT_EQ(shortness(P({2, 2}), 4, 4), 2);
    EXPECT_EQ(shortness(P({2, 2}), 2, 2), 2);
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            for (const auto& lam : subpartitions(Partition::rectangle(m, n)))
                EXPECT_EQ(shortness(lam, m, n), shortness_oracle(lam, m, n)) << to_string(lam) << " in " << m << "x" << n;
}

TEST(Partition, ShapeClass) {
    EXPECT_EQ(shape_class(Partition{}), ShapeClass::zero);
    EXPECT_EQ(shape_class(P({3, 3})), ShapeClass::rectangle);
    EXPECT_EQ(shape_class(P({4, 1, 1})), ShapeClass::hook);
    EXPECT_EQ(shape_class(P({3, 3, 1, 1})), ShapeClass::fat_hook);
    EXPECT_EQ(shape_class(P({3, 2, 1})), ShapeClass::other);
    EXPECT_TRUE(is_fat_hook(P({4, 1, 1})));
}

TEST(Partition, EnumeratorsCount) {
    const std::vector<std::size_t> p{1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(partitions_of(n).size(), p[static_cast<std::size_t>(n)]);
    // binomial(m+n, n) partitions fit in the m x n box
    EXPECT_EQ(subpartitions(Partition::rectangle(3, 4)).size(), 35u);
}

TEST(SkewShape, Validation) {
    EXPECT_THROW(SkewShape(P({2}), P({3})), std::invalid_argument);
    EXPECT_THROW(SkewShape(P({2, 1}), P({1, 1, 1})), std::invalid_argument);
    EXPECT_EQ(SkewShape(P({4, 2, 2, 1}), P({2, 2})).size(), 5);
}

TEST(SkewShape, BasicForm) {
    EXPECT_EQ(basic_form(SkewShape(P({4, 2, 2, 1}), P({2, 2}))), SkewShape(P({4, 2, 1}), P({2})));
    EXPECT_EQ(basic_form(SkewShape(P({3, 3}), P({3}))), SkewShape(P({3})));
    EXPECT_EQ(basic_form(SkewShape(P({3, 3}), P({1, 1}))), SkewShape(P({2, 2})));
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : subpartitions(lam)) {
                const SkewShape s(lam, mu);
                const SkewShape b = basic_form(s);
                EXPECT_TRUE(is_basic(b));
                EXPECT_EQ(basic_form(b), b);
                EXPECT_EQ(normalized_cells(b), squeezed_cells(s)) << to_string(s);
            }
}

TEST(SkewShape, RotatePi) {
    EXPECT_EQ(rotate_pi(SkewShape(P({4, 2, 2, 1}), P({2, 2}))), SkewShape(P({4, 4, 2, 2}), P({3, 2, 2})));
    EXPECT_EQ(rotate_pi(SkewShape(P({1}))), SkewShape(P({1})));
    EXPECT_EQ(rotate_pi(SkewShape(P({2, 1}))), SkewShape(P({2, 2}), P({1})));
    for (int n = 0; n <= 6; ++n)
        for (const auto& lam : partitions_of(n))
            for (const auto& mu : subpartitions(lam)) {
                const SkewShape s(lam, mu);
                // the rotated cell set is the original turned by 180 degrees
                std::set<std::pair<int, int>> turned;
                for (auto [r, c] : normalized_cells(s)) turned.insert({-r, -c});
                std::set<std::pair<int, int>> expect;
                int r0 = 1 << 20, c0 = 1 << 20;
                for (auto [r, c] : turned) r0 = std::min(r0, r), c0 = std::min(c0, c);
                for (auto [r, c] : turned) expect.insert({r - r0, c - c0});
                EXPECT_EQ(normalized_cells(rotate_pi(s)), expect);
            }
}

TEST(Text, ParseAndFormat) {
    EXPECT_EQ(parse_partition("3,2,1"), P({3, 2, 1}));
    EXPECT_EQ(parse_partition("(3^2,1)"), P({3, 3, 1}));
    EXPECT_EQ(parse_partition("-"), Partition{});
    EXPECT_EQ(parse_skew("4,2,2,1/2,2"), SkewShape(P({4, 2, 2, 1}), P({2, 2})));
    EXPECT_THROW(parse_partition("3,a"), std::invalid_argument);
    EXPECT_EQ(to_string(P({2, 1})), "(2,1)");
    EXPECT_EQ(to_string(Partition{}), "()");
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : partitions_of(n)) EXPECT_EQ(parse_partition(to_arg(lam)), lam);
}
