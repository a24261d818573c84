#pragma once

// Deterministic random inputs for the test suites. Everything is seeded
// explicitly so failures replay.

#include "mdeg/arrangement.hpp"
#include "mdeg/matrix.hpp"
#include "mdeg/polymatroid.hpp"
#include "mdeg/subspace.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <vector>

namespace mdeg::testgen {

inline int rand_int(std::mt19937_64& eng, int lo, int hi) {
    return lo + static_cast<int>(eng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline RationalMatrix random_int_matrix(std::mt19937_64& eng, std::size_t rows, std::size_t cols,
                                        int lo = -5, int hi = 5) {
    RationalMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rand_int(eng, lo, hi);
        }
    }
    return m;
}

/// Random k-dimensional subspace of Q^D with small integer basis entries.
inline Subspace random_subspace(std::mt19937_64& eng, std::size_t ambient, std::size_t dim) {
    for (;;) {
        RationalMatrix basis = random_int_matrix(eng, dim, ambient);
        if (rank(basis) == dim) {
            return Subspace(std::move(basis));
        }
    }
}

/// Random arrangement of n nonzero subspaces of Q^D; optionally resampled
/// until the subspaces span the ambient space.
inline SubspaceArrangement random_arrangement(std::mt19937_64& eng, int n, std::size_t ambient,
                                              bool require_span) {
    for (;;) {
        std::vector<Subspace> spaces;
        for (int i = 0; i < n; ++i) {
            const std::size_t dim = static_cast<std::size_t>(
                rand_int(eng, 1, static_cast<int>(ambient)));
            spaces.push_back(random_subspace(eng, ambient, dim));
        }
        SubspaceArrangement arr(ambient, std::move(spaces));
        if (!require_span || arr.spans_ambient()) {
            return arr;
        }
    }
}

/// Random valid polymatroid rank function with f([n]) <= cap. Mixes capped
/// weight functions (submodular by construction), sums of two of them, and
/// column-matroid ranks.
inline RankFunction random_valid_polymatroid(std::mt19937_64& eng, int n, long long cap = 10) {
    const int variant = rand_int(eng, 0, 2);
    if (variant == 2) {
        const std::size_t d = static_cast<std::size_t>(rand_int(eng, 1, n));
        const RationalMatrix cols = random_int_matrix(eng, d, static_cast<std::size_t>(n), -2, 2);
        return RankFunction::from_fn(n, [&](std::uint32_t mask) -> long long {
            RationalMatrix sel(0, d);
            for (int j = 0; j < n; ++j) {
                if ((mask >> j) & 1u) {
                    std::vector<Rational> col(d);
                    for (std::size_t r = 0; r < d; ++r) {
                        col[r] = cols(r, static_cast<std::size_t>(j));
                    }
                    sel.append_row(col);
                }
            }
            return static_cast<long long>(rank(sel));
        });
    }

    const int layers = variant + 1;
    std::vector<std::vector<long long>> weights(layers, std::vector<long long>(n));
    std::vector<long long> caps(layers);
    long long budget = cap;
    for (int l = 0; l < layers; ++l) {
        long long total = 0;
        for (int i = 0; i < n; ++i) {
            weights[l][i] = rand_int(eng, 0, 4);
            total += weights[l][i];
        }
        const long long hi = std::min(budget - (layers - 1 - l), std::max<long long>(total, 1));
        caps[l] = rand_int(eng, 1, static_cast<int>(std::max<long long>(hi, 1)));
        budget -= caps[l];
    }
    return RankFunction::from_fn(n, [&](std::uint32_t mask) {
        long long v = 0;
        for (int l = 0; l < layers; ++l) {
            long long s = 0;
            for (int i = 0; i < n; ++i) {
                if ((mask >> i) & 1u) {
                    s += weights[l][i];
                }
            }
            v += std::min(s, caps[l]);
        }
        return v;
    });
}

/// The Vamos matroid: rank 4 on 8 elements, all 4-subsets bases except the
/// five circuit-hyperplanes (paired elements {1,2},{3,4},{5,6},{7,8}; every
/// union of two pairs except {1,2}u{3,4}).
inline RankFunction vamos_rank_function() {
    constexpr std::uint32_t kCircuitHyperplanes[5] = {0x33, 0xC3, 0x3C, 0xCC, 0xF0};
    return RankFunction::from_fn(8, [&](std::uint32_t mask) -> long long {
        for (std::uint32_t h : kCircuitHyperplanes) {
            if (mask == h) {
                return 3;
            }
        }
        return std::min(std::popcount(mask), 4);
    });
}

/// Uniform matroid U_{k,n}.
inline RankFunction uniform_matroid(int k, int n) {
    return RankFunction::from_fn(n, [k](std::uint32_t mask) -> long long {
        return std::min(std::popcount(mask), k);
    });
}

/// All points of the sum-d slice that satisfy every subset-sum bound --
/// checked the slow way, as an independent enumeration oracle.
inline LatticePointSet naive_points_under(int n, const std::vector<long long>& bound) {
    LatticePointSet out;
    out.n = n;
    const long long total = bound[(std::size_t{1} << n) - 1];
    if (total < 0) {
        return out;
    }
    std::vector<int> t(n, 0);
    auto rec = [&](auto&& self, int i, long long remaining) -> void {
        if (i == n - 1) {
            t[i] = static_cast<int>(remaining);
            bool ok = true;
            for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n) && ok; ++mask) {
                long long s = 0;
                for (int j = 0; j < n; ++j) {
                    if ((mask >> j) & 1u) {
                        s += t[j];
                    }
                }
                ok = s <= bound[mask];
            }
            if (ok) {
                out.points.insert(t);
            }
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            t[i] = static_cast<int>(v);
            self(self, i + 1, remaining - v);
        }
    };
    if (n == 0) {
        return out;
    }
    rec(rec, 0, total);
    return out;
}

} // namespace mdeg::testgen
