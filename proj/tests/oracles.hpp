#pragma once

// Reference computations for the tests, deliberately built on different
// algorithms from the library: Kostka numbers from chains of horizontal
// strips, Schur coefficients by unitriangular inversion of the Kostka
// matrix, and standard monomials by listing multichains outright.

#include <algorithm>
#include <functional>
#include <map>
#include <vector>

#include "spherical/grassmann.hpp"
#include "spherical/shapes.hpp"

namespace oracle {

using spherical::Partition;
using spherical::SkewShape;

/// All rho with kappa <= rho <= lambda and rho/kappa a horizontal strip.
inline std::vector<std::vector<int>> horizontal_strips(const std::vector<int>& kappa, const Partition& lambda) {
    std::vector<std::vector<int>> out;
    std::vector<int> rho(static_cast<std::size_t>(lambda.length()), 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == lambda.length()) {
            out.push_back(rho);
            return;
        }
        const int lo = i < static_cast<int>(kappa.size()) ? kappa[static_cast<std::size_t>(i)] : 0;
        const int hi = i == 0 ? lambda.part(0) : std::min(lambda.part(i), kappa[static_cast<std::size_t>(i - 1)]);
        for (int v = lo; v <= hi; ++v) {
            rho[static_cast<std::size_t>(i)] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

/// Number of SSYT of shape lambda/mu and content alpha (any composition).
inline long long skew_kostka(const SkewShape& s, const std::vector<int>& alpha) {
    const Partition& lambda = s.outer();
    std::vector<int> start(static_cast<std::size_t>(lambda.length()), 0);
    for (int i = 0; i < lambda.length(); ++i) start[static_cast<std::size_t>(i)] = s.inner().part(i);
    std::map<std::vector<int>, long long> layer{{start, 1}};
    for (int a : alpha) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [kappa, c] : layer) {
            int base = 0;
            for (int x : kappa) base += x;
            for (const auto& rho : horizontal_strips(kappa, lambda)) {
                int sz = 0;
                for (int x : rho) sz += x;
                if (sz - base == a) next[rho] += c;
            }
        }
        layer = std::move(next);
    }
    std::vector<int> full(lambda.vec());
    return layer.count(full) ? layer[full] : 0;
}

/// #SSYT of shape lambda/mu with entries in 1..n.
inline long long ssyt_count(const SkewShape& s, int n) {
    const Partition& lambda = s.outer();
    std::vector<int> start(static_cast<std::size_t>(lambda.length()), 0);
    for (int i = 0; i < lambda.length(); ++i) start[static_cast<std::size_t>(i)] = s.inner().part(i);
    std::map<std::vector<int>, long long> layer{{start, 1}};
    for (int step = 0; step < n; ++step) {
        std::map<std::vector<int>, long long> next;
        for (const auto& [kappa, c] : layer)
            for (const auto& rho : horizontal_strips(kappa, lambda)) next[rho] += c;
        layer = std::move(next);
    }
    return layer[std::vector<int>(lambda.vec())];
}

/// Coefficients of s_{lambda/mu} in the Schur basis, restricted to nu with at
/// most max_len parts. K_{nu,alpha} is unitriangular in dominance order, so
/// peeling partitions in decreasing lexicographic order solves the system.
inline std::map<Partition, long long> schur_coefficients(const SkewShape& s, int max_len) {
    std::vector<Partition> parts = spherical::partitions_of(s.size());
    std::sort(parts.begin(), parts.end(), [](const Partition& a, const Partition& b) { return b < a; });
    std::map<Partition, long long> coeff;
    for (const Partition& alpha : parts) {
        long long k = skew_kostka(s, alpha.vec());
        for (const auto& [nu, c] : coeff) k -= c * skew_kostka(SkewShape(nu), alpha.vec());
        if (k != 0) coeff[alpha] = k;
    }
    std::map<Partition, long long> out;
    for (const auto& [nu, c] : coeff)
        if (nu.length() <= max_len) out[nu] = c;
    return out;
}

/// Multichains tau_1 <= ... <= tau_r <= w in the componentwise order.
inline long long standard_monomials(const spherical::GrassWord& w, int r) {
    std::vector<std::vector<int>> below;
    std::vector<int> cur;
    std::function<void(int)> gen = [&](int i) {
        if (i == w.d()) {
            below.push_back(cur);
            return;
        }
        const int lo = i == 0 ? 1 : cur.back() + 1;
        for (int v = lo; v <= w[static_cast<std::size_t>(i)]; ++v) {
            cur.push_back(v);
            gen(i + 1);
            cur.pop_back();
        }
    };
    gen(0);
    auto leq = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    long long total = 0;
    std::function<void(int, std::size_t)> chain = [&](int depth, std::size_t top) {
        if (depth == r) {
            ++total;
            return;
        }
        for (std::size_t j = 0; j < below.size(); ++j)
            if (leq(below[j], below[top])) chain(depth + 1, j);
    };
    if (r == 0) return 1;
    for (std::size_t j = 0; j < below.size(); ++j) chain(1, j);
    return total;
}

}  // namespace oracle
