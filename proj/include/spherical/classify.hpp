#pragma once

// Decomposition of the degree-r piece of C[X(w)] into irreducible L-modules,
// the closed-form MC / MCC criteria, the sphericity classification with its
// maximal-Levi and torus corollaries, and an exhaustive consistency sweep
// against the brute-force decomposition.

#include <chrono>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spherical/errors.hpp"
#include "spherical/grassmann.hpp"
#include "spherical/heads.hpp"
#include "spherical/lr.hpp"
#include "spherical/numeric.hpp"

namespace spherical {

struct Decomposition {
    int degree = 0;
    std::map<IrrLabel, Count> terms;

    Count max_multiplicity() const {
        Count m = 0;
        for (const auto& [label, c] : terms) m = std::max(m, c);
        return m;
    }

    bool multiplicity_free() const { return max_multiplicity() <= 1; }

    /// sum over labels of multiplicity * prod_k dim W^{nu_k}(C^{N_k}).
    BigInt dimension(const LeviBlocks& blocks) const {
        BigInt total = 0;
        for (const auto& [label, c] : terms) {
            BigInt dim = c;
            for (int k = 0; k < blocks.count(); ++k)
                dim *= weyl_dimension(label.nus[static_cast<std::size_t>(k)], blocks.size(k + 1));
            total += dim;
        }
        return total;
    }
};

/// An irreducible label reached twice in one degree. `first == second` means
/// the repeat happened inside a single head module.
struct MultiplicityWitness {
    int degree = 0;
    IrrLabel label;
    StandardHead first;
    StandardHead second;

    bool within_one_head() const { return first == second; }
};

namespace detail {

struct DegreeScan {
    Decomposition decomposition;
    std::optional<MultiplicityWitness> witness;
};

inline DegreeScan scan_degree(const Quadruple& q, int r, ExpansionCache& cache, bool stop_at_repeat) {
    require_stable_reduced(q, "decompose_degree");
    const LeviBlocks& blocks = q.blocks();
    const int b = blocks.count();
    DegreeScan out;
    out.decomposition.degree = r;
    const std::vector<StandardHead> heads = enumerate_standard_heads(q, r);
    std::map<IrrLabel, std::size_t> origin;

    std::vector<const Expansion*> factors(static_cast<std::size_t>(b));
    IrrLabel label;
    label.nus.resize(static_cast<std::size_t>(b));

    for (std::size_t hi = 0; hi < heads.size(); ++hi) {
        const std::vector<SkewShape> shapes = block_shapes(heads[hi], blocks);
        for (int k = 0; k < b; ++k)
            factors[static_cast<std::size_t>(k)] = &cache.poly(shapes[static_cast<std::size_t>(k)], blocks.size(k + 1));

        bool stop = false;
        auto rec = [&](auto&& self, int k, Count mult) -> void {
            if (stop) return;
            if (k == b) {
                auto [it, inserted] = out.decomposition.terms.try_emplace(label, 0);
                it->second = checked_add(it->second, mult);
                if (inserted) origin.emplace(label, hi);
                if (it->second >= 2 && !out.witness) {
                    out.witness = MultiplicityWitness{r, label, heads[origin.at(label)], heads[hi]};
                    if (stop_at_repeat) stop = true;
                }
                return;
            }
            for (const auto& [nu, c] : factors[static_cast<std::size_t>(k)]->terms) {
                label.nus[static_cast<std::size_t>(k)] = nu;
                self(self, k + 1, checked_mul(mult, c));
                if (stop) return;
            }
        };
        rec(rec, 0, 1);
        if (stop) break;
    }
    return out;
}

}  // namespace detail

/// Irreducible decomposition of C[X(w)]_r as L-module, labelled by the
/// highest weights of the (undualised) head modules.
inline Decomposition decompose_degree(const Quadruple& q, int r, ExpansionCache& cache) {
    if (r < 0) throw std::invalid_argument("degree must be non-negative");
    return detail::scan_degree(q, r, cache, false).decomposition;
}

inline Decomposition decompose_degree(const Quadruple& q, int r) {
    ExpansionCache cache;
    return decompose_degree(q, r, cache);
}

struct BruteForceResult {
    bool multiplicity_free = true;
    int degrees_checked = 0;
    std::optional<MultiplicityWitness> witness;
};

/// Multiplicity-freeness of every degree 1..r_max by direct decomposition.
inline BruteForceResult brute_force_multfree(const Quadruple& q, int r_max, ExpansionCache& cache) {
    BruteForceResult res;
    for (int r = 1; r <= r_max; ++r) {
        detail::DegreeScan scan = detail::scan_degree(q, r, cache, true);
        res.degrees_checked = r;
        if (scan.witness) {
            res.multiplicity_free = false;
            res.witness = std::move(scan.witness);
            break;
        }
    }
    return res;
}

inline BruteForceResult brute_force_multfree(const Quadruple& q, int r_max) {
    ExpansionCache cache;
    return brute_force_multfree(q, r_max, cache);
}

// ---------------------------------------------------------------------------
// Closed-form criteria. Indices k are 1-based block indices.

struct FastCheck {
    bool ok = true;
    std::optional<int> failing_k;
};

namespace detail {

struct BlockSums {
    std::vector<int> h;       // h_1..h_b at [1..b]
    std::vector<int> n;       // N_1..N_b at [1..b]
    std::vector<int> h_pre;   // h_1 + ... + h_k at [k]
    std::vector<int> n_pre;   // N_1 + ... + N_k at [k]
    std::vector<int> h_suf;   // h_k + ... + h_b at [k], zero at [b+1]
    int b = 0;

    explicit BlockSums(const Quadruple& q) {
        b = q.blocks().count();
        const std::vector<int> hv = h_vector(q);
        h.assign(static_cast<std::size_t>(b) + 2, 0);
        n.assign(static_cast<std::size_t>(b) + 2, 0);
        h_pre.assign(static_cast<std::size_t>(b) + 2, 0);
        n_pre.assign(static_cast<std::size_t>(b) + 2, 0);
        h_suf.assign(static_cast<std::size_t>(b) + 2, 0);
        for (int k = 1; k <= b; ++k) {
            h[static_cast<std::size_t>(k)] = hv[static_cast<std::size_t>(k - 1)];
            n[static_cast<std::size_t>(k)] = q.blocks().size(k);
            h_pre[static_cast<std::size_t>(k)] = h_pre[static_cast<std::size_t>(k - 1)] + h[static_cast<std::size_t>(k)];
            n_pre[static_cast<std::size_t>(k)] = n_pre[static_cast<std::size_t>(k - 1)] + n[static_cast<std::size_t>(k)];
        }
        for (int k = b; k >= 1; --k)
            h_suf[static_cast<std::size_t>(k)] = h_suf[static_cast<std::size_t>(k) + 1] + h[static_cast<std::size_t>(k)];
    }

    int H(int k) const { return h_pre[static_cast<std::size_t>(k)]; }
    int NS(int k) const { return n_pre[static_cast<std::size_t>(k)]; }
    int suffix(int k) const { return k > b ? 0 : h_suf[static_cast<std::size_t>(k)]; }
    int hk(int k) const { return h[static_cast<std::size_t>(k)]; }
    int nk(int k) const { return n[static_cast<std::size_t>(k)]; }
};

/// First of the five MC conditions satisfied at block k (1..5), or 0.
inline int mc_condition_at(const BlockSums& s, int k) {
    if (s.nk(k) == 1) return 1;
    if (s.H(k - 1) + 1 >= s.NS(k - 1)) return 2;
    if (s.hk(k) == s.nk(k) && s.H(k - 1) + 2 >= s.NS(k - 1)) return 3;
    if (s.hk(k) > 0 && s.suffix(k + 1) < 2) return 4;
    if (s.hk(k) == 0 && s.suffix(k + 1) <= 2) return 5;
    return 0;
}

}  // namespace detail

/// MC: every head's per-block skew Weyl modules are multiplicity free.
inline FastCheck check_MC_fast(const Quadruple& q) {
    detail::require_stable_reduced(q, "check_MC_fast");
    const detail::BlockSums s(q);
    for (int k = 2; k < s.b; ++k)
        if (detail::mc_condition_at(s, k) == 0) return {false, k};
    return {};
}

/// MCC: distinct standard heads share no irreducible constituent.
inline FastCheck check_MCC_fast(const Quadruple& q) {
    detail::require_stable_reduced(q, "check_MCC_fast");
    const detail::BlockSums s(q);
    for (int k = 2; k < s.b - 1; ++k)
        if (!(s.H(k) + 1 >= s.NS(k) || s.suffix(k + 1) < 2)) return {false, k};
    return {};
}

enum class Verdict { spherical, not_spherical };
enum class Route { trivial_identity, at_most_two_blocks, three_blocks, four_or_more_blocks };

inline std::string_view to_string(Verdict v) { return v == Verdict::spherical ? "spherical" : "not_spherical"; }

inline std::string_view to_string(Route r) {
    switch (r) {
        case Route::trivial_identity: return "trivial_identity";
        case Route::at_most_two_blocks: return "at_most_two_blocks";
        case Route::three_blocks: return "three_blocks";
        case Route::four_or_more_blocks: return "four_or_more_blocks";
    }
    return "unknown";
}

struct ClassificationResult {
    Verdict verdict = Verdict::spherical;
    Route route = Route::trivial_identity;
    bool reduced_first = false;
    std::optional<Quadruple> reduced;  // the quadruple the criteria were applied to
    std::optional<int> condition;      // three blocks: first satisfied condition, 1..5
    std::optional<int> p_w;            // four or more blocks
    std::optional<int> mc_failing_k;
    std::optional<int> mcc_failing_k;

    bool spherical() const { return verdict == Verdict::spherical; }
};

namespace detail {
inline void require_stable(const Quadruple& q) {
    const std::vector<int> missing = missing_boundary_roots(q.w(), q.blocks());
    if (missing.empty()) return;
    std::string msg = "quadruple is not stable: block boundaries miss root(s)";
    for (int r : missing) msg += " " + std::to_string(r);
    throw std::invalid_argument(msg);
}
}  // namespace detail

/// Sphericity (equivalently multiplicity-freeness of C[X(w)]) of a stable
/// quadruple. Non-reduced input is reduced first; the identity word is a
/// point and therefore spherical.
inline ClassificationResult classify(const Quadruple& q) {
    detail::require_stable(q);
    ClassificationResult res;
    if (q.w().is_identity()) return res;

    const Quadruple red = is_reduced(q) ? q : reduce(q);
    res.reduced_first = !is_reduced(q);
    res.reduced = red;
    const detail::BlockSums s(red);
    const int b = s.b;

    bool ok = false;
    if (b <= 2) {
        res.route = Route::at_most_two_blocks;
        ok = true;
    } else if (b == 3) {
        res.route = Route::three_blocks;
        const int c = detail::mc_condition_at(s, 2);
        if (c != 0) res.condition = c;
        ok = c != 0;
    } else {
        res.route = Route::four_or_more_blocks;
        int p = b - 1;
        for (int k = 2; k < b - 1; ++k)
            if (s.suffix(k + 1) < 2) {
                p = k;
                break;
            }
        res.p_w = p;
        ok = p == 2 || (p > 2 && s.H(p - 1) + 1 >= s.NS(p - 1));
    }
    res.verdict = ok ? Verdict::spherical : Verdict::not_spherical;
    if (!ok) {
        if (auto mc = check_MC_fast(red); !mc.ok) res.mc_failing_k = mc.failing_k;
        if (auto mcc = check_MCC_fast(red); !mcc.ok) res.mcc_failing_k = mcc.failing_k;
    }
    return res;
}

/// Classification for the maximal Levi acting on X(w); w must be reduced.
inline ClassificationResult classify_max_levi(const GrassWord& w) {
    if (!is_reduced(w)) throw std::invalid_argument("classify_max_levi: word is not reduced");
    const Quadruple q(w, maximal_levi(w));
    const std::vector<int> h = h_vector(q);
    const int b = q.blocks().count();
    ClassificationResult res;
    res.reduced = q;
    bool ok;
    if (b <= 2) {
        res.route = Route::at_most_two_blocks;
        ok = true;
    } else if (b == 3) {
        res.route = Route::three_blocks;
        ok = h[0] + 1 == q.blocks().size(1) || h[2] == 1;
    } else {
        res.route = Route::four_or_more_blocks;
        ok = false;
    }
    res.verdict = ok ? Verdict::spherical : Verdict::not_spherical;
    return res;
}

/// X(w) is toric for a quotient of the maximal torus iff w is
/// (1,...,p, p+2,...,d, f) with 0 <= p < d-1 or (1,...,d-1, f), d < f <= N.
/// The identity word (a point) also counts.
inline bool is_toric(const GrassWord& w) {
    const int d = w.d();
    const int f = w.last();
    if (w.is_identity()) return true;
    if (f <= d) return false;
    for (int p = 0; p <= d - 1; ++p) {
        // p == d-1 is the second form.
        bool match = true;
        int idx = 0;
        for (int v = 1; v <= d && match; ++v) {
            if (v == p + 1) continue;
            if (idx >= d - 1 || w[static_cast<std::size_t>(idx)] != v) match = false;
            ++idx;
        }
        if (match && idx == d - 1) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------

struct SweepReport {
    int n_max = 0;
    int r_max = 0;
    long long quadruples = 0;       // stable quadruples visited
    long long identity_cases = 0;
    long long spherical = 0;
    long long distinct_reduced = 0;  // brute-force decompositions performed
    std::optional<std::string> counterexample;

    bool passed() const { return !counterexample.has_value(); }
};

/// Exhaustive check over every stable quadruple with N <= n_max:
/// classification against brute force up to degree r_max, the dimension
/// identity of the head decomposition, and invariance of standard monomial
/// counts under reduction. Stops at the first counterexample.
inline SweepReport verify_sweep(int n_max, int r_max) {
    if (n_max < 2) throw std::invalid_argument("verify_sweep: n_max must be at least 2");
    if (r_max < 1) throw std::invalid_argument("verify_sweep: r_max must be positive");
    SweepReport rep;
    rep.n_max = n_max;
    rep.r_max = r_max;
    ExpansionCache cache;
    std::map<Quadruple, bool> brute_memo;

    auto describe = [](const Quadruple& q) {
        return "w=" + to_string(q.w()) + " d=" + std::to_string(q.d()) + " N=" + std::to_string(q.n()) +
               " L=" + to_string(q.blocks());
    };

    for (int n = 2; n <= n_max; ++n) {
        const std::vector<LeviBlocks> comps = all_compositions(n);
        for (int d = 1; d < n; ++d) {
            for (const GrassWord& w : all_words(d, n)) {
                std::vector<BigInt> counts;
                for (int r = 0; r <= r_max; ++r) counts.push_back(count_standard_monomials(w, r));
                for (const LeviBlocks& blocks : comps) {
                    const Quadruple q(w, blocks);
                    if (!is_stable(q)) continue;
                    ++rep.quadruples;
                    const ClassificationResult cls = classify(q);
                    if (cls.spherical()) ++rep.spherical;

                    if (w.is_identity()) {
                        ++rep.identity_cases;
                        for (int r = 0; r <= r_max; ++r)
                            if (counts[static_cast<std::size_t>(r)] != 1) {
                                rep.counterexample = describe(q) + ": identity word with degree-" + std::to_string(r) +
                                                     " dimension " + counts[static_cast<std::size_t>(r)].str();
                                return rep;
                            }
                        if (!cls.spherical()) {
                            rep.counterexample = describe(q) + ": identity word classified not spherical";
                            return rep;
                        }
                        continue;
                    }

                    const Quadruple red = reduce(q);
                    auto it = brute_memo.find(red);
                    if (it == brute_memo.end()) {
                        ++rep.distinct_reduced;
                        for (int r = 1; r <= r_max; ++r) {
                            BigInt total = 0;
                            for (const StandardHead& s : enumerate_standard_heads(red, r))
                                total += head_module_dim(s, red.blocks());
                            const BigInt expect = count_standard_monomials(red.w(), r);
                            if (total != expect) {
                                rep.counterexample = describe(red) + ": degree-" + std::to_string(r) +
                                                     " head dimensions sum to " + total.str() + ", expected " +
                                                     expect.str();
                                return rep;
                            }
                        }
                        const BruteForceResult bf = brute_force_multfree(red, r_max, cache);
                        it = brute_memo.emplace(red, bf.multiplicity_free).first;
                    }
                    if (it->second != cls.spherical()) {
                        rep.counterexample = describe(q) + " (reduced " + describe(red) + "): classify says " +
                                             std::string(to_string(cls.verdict)) + ", brute force up to degree " +
                                             std::to_string(r_max) + " says " +
                                             (it->second ? "multiplicity free" : "not multiplicity free");
                        return rep;
                    }
                    for (int r = 0; r <= r_max; ++r)
                        if (count_standard_monomials(red.w(), r) != counts[static_cast<std::size_t>(r)]) {
                            rep.counterexample = describe(q) + ": standard monomial count changes under reduction in degree " +
                                                 std::to_string(r);
                            return rep;
                        }
                }
            }
        }
    }
    return rep;
}

}  // namespace spherical
