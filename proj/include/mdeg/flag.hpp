#pragma once

#include "mdeg/points.hpp"
#include "mdeg/polymatroid.hpp"
#include "mdeg/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace mdeg {

/// Integer polynomial in x_1..x_{n+1}, sparse: exponent vector -> coefficient.
using FlagPoly = std::map<std::vector<int>, Integer>;

inline void poly_add_term(FlagPoly& p, const std::vector<int>& expo, const Integer& coeff) {
    if (coeff == 0) {
        return;
    }
    auto it = p.find(expo);
    if (it == p.end()) {
        p.emplace(expo, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) {
            p.erase(it);
        }
    }
}

inline FlagPoly poly_mul(const FlagPoly& a, const FlagPoly& b) {
    FlagPoly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            poly_add_term(out, e, ca * cb);
        }
    }
    return out;
}

/// Schubert divisor class z_k = x_1 + ... + x_k in n+1 variables.
inline FlagPoly z_poly(int n, int k) {
    if (k < 1 || k > n) {
        throw std::invalid_argument("z_poly: k must be in [1, n]");
    }
    FlagPoly p;
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(n + 1, 0);
        e[i] = 1;
        poly_add_term(p, e, 1);
    }
    return p;
}

/// Elementary symmetric polynomial e_r(x_1..x_{n+1}).
inline FlagPoly elementary_poly(int n, int r) {
    const int vars = n + 1;
    if (r < 1 || r > vars) {
        throw std::invalid_argument("elementary_poly: r must be in [1, n+1]");
    }
    FlagPoly p;
    std::vector<int> idx(r);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == r) {
            std::vector<int> e(vars, 0);
            for (int i : idx) {
                e[i] = 1;
            }
            poly_add_term(p, e, 1);
            return;
        }
        for (int i = start; i < vars; ++i) {
            idx[depth] = i;
            self(self, i + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    return p;
}

/// Element of the coinvariant algebra k[x_1..x_{n+1}] / (e_1..e_{n+1}) in
/// staircase normal form: every exponent satisfies a_i <= n+1-i.
struct CoinvariantElement {
    int n = 0;
    FlagPoly terms;

    bool operator==(const CoinvariantElement&) const = default;

    Integer coefficient(const std::vector<int>& expo) const {
        auto it = terms.find(expo);
        return it == terms.end() ? Integer(0) : it->second;
    }
};

/*
 * Normal form modulo the symmetric ideal.
 *
 * The rewriting rules come from the complete homogeneous relations
 * h_{n+2-i}(x_1, ..., x_i) = 0, which hold in the quotient because
 * h_k(x_1..x_i) == +-e_k(x_{i+1}..x_{n+1}) there, and that elementary
 * symmetric polynomial has more degree than variables once k = n+2-i.
 * Each relation is monic in its top power, so
 *
 *   x_i^{n+2-i}  ->  -(h_{n+2-i}(x_1..x_i) - x_i^{n+2-i})
 *
 * replaces a staircase violation by monomials that are strictly smaller in
 * lex order weighted x_{n+1} > ... > x_1; the rules form a Groebner basis of
 * the ideal, so the rewriting terminates and the result is unique with the
 * staircase monomials as basis.
 */
inline CoinvariantElement reduce(int n, FlagPoly p) {
    const int vars = n + 1;
    for (const auto& [expo, coeff] : p) {
        if (static_cast<int>(expo.size()) != vars) {
            throw std::invalid_argument("reduce: exponent length must be n+1");
        }
    }

    FlagPoly result;
    while (!p.empty()) {
        const auto [expo, coeff] = *p.begin();
        p.erase(p.begin());

        int pivot = -1; // largest variable index (0-based) violating the staircase
        for (int i = vars - 1; i >= 0; --i) {
            if (expo[i] >= vars + 1 - (i + 1)) { // a_i >= n+2-i, 1-based i
                pivot = i;
                break;
            }
        }
        if (pivot < 0) {
            poly_add_term(result, expo, coeff);
            continue;
        }

        const int k = vars + 1 - (pivot + 1); // degree of the monic relation at x_{pivot+1}
        std::vector<int> base = expo;
        base[pivot] -= k;

        // subtract the non-leading monomials of h_k(x_1..x_{pivot+1})
        std::vector<int> comp(pivot + 1, 0);
        auto emit = [&](auto&& self, int var, int remaining) -> void {
            if (var == pivot) {
                comp[var] = remaining;
                if (remaining == k) {
                    return; // the leading power itself
                }
                std::vector<int> e = base;
                for (int i = 0; i <= pivot; ++i) {
                    e[i] += comp[i];
                }
                poly_add_term(p, e, -coeff);
                return;
            }
            for (int v = 0; v <= remaining; ++v) {
                comp[var] = v;
                self(self, var + 1, remaining - v);
            }
        };
        emit(emit, 0, k);
    }
    return CoinvariantElement{n, std::move(result)};
}

/// The point class representative: x_1^n x_2^{n-1} ... x_n^1.
inline std::vector<int> staircase_monomial(int n) {
    std::vector<int> e(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        e[i] = n - i;
    }
    return e;
}

/// deg(z_1^{a_1} ... z_n^{a_n}) computed in the coinvariant algebra: reduce
/// the product and read off the staircase coefficient. Off the top-degree
/// slice (sum a_k != n(n+1)/2) the degree is 0.
inline Integer schubert_divisor_degree(int n, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != n) {
        throw std::invalid_argument("schubert_divisor_degree: need n exponents");
    }
    long long sum = 0;
    for (int v : a) {
        if (v < 0) {
            throw std::invalid_argument("schubert_divisor_degree: negative exponent");
        }
        sum += v;
    }
    if (sum != static_cast<long long>(n) * (n + 1) / 2) {
        return 0;
    }
    FlagPoly acc;
    acc.emplace(std::vector<int>(n + 1, 0), 1);
    CoinvariantElement elem{n, acc};
    for (int k = 1; k <= n; ++k) {
        const FlagPoly zk = z_poly(n, k);
        for (int rep = 0; rep < a[static_cast<std::size_t>(k - 1)]; ++rep) {
            elem = reduce(n, poly_mul(elem.terms, zk));
        }
    }
    return elem.coefficient(staircase_monomial(n));
}

// ---------------------------------------------------------------------------
// Bruhat-chain oracle
// ---------------------------------------------------------------------------

using Permutation = std::vector<int>; // one-line notation, values 1..n+1

inline Permutation identity_permutation(int size) {
    Permutation w(size);
    std::iota(w.begin(), w.end(), 1);
    return w;
}

inline Permutation longest_permutation(int size) {
    Permutation w(size);
    for (int i = 0; i < size; ++i) {
        w[i] = size - i;
    }
    return w;
}

/// w -> w*t_{ij} covers w iff w(i) < w(j) with no intermediate value between
/// positions i and j. Positions are 0-based here.
inline bool bruhat_cover_swap(const Permutation& w, int i, int j) {
    if (w[i] >= w[j]) {
        return false;
    }
    for (int k = i + 1; k < j; ++k) {
        if (w[i] < w[k] && w[k] < w[j]) {
            return false;
        }
    }
    return true;
}

/// Expands (a_1..a_n) to the default multiplication word 1^{a_1} 2^{a_2} ...
inline std::vector<int> monk_word(const std::vector<int>& a) {
    std::vector<int> word;
    for (std::size_t k = 0; k < a.size(); ++k) {
        word.insert(word.end(), static_cast<std::size_t>(a[k]), static_cast<int>(k) + 1);
    }
    return word;
}

/// Number of saturated Bruhat walks from the identity to the longest element
/// where step t, labelled by factor k, applies some transposition t_{ij}
/// with i <= k < j and length going up by one. This is iterated Monk
/// multiplication, so the count equals the coefficient of the point class in
/// prod z_k over the word -- independent of the word's order.
inline Integer monk_chain_count_word(int n, const std::vector<int>& word) {
    const int size = n + 1;
    std::map<Permutation, Integer> counts;
    counts.emplace(identity_permutation(size), 1);
    for (int k : word) {
        if (k < 1 || k > n) {
            throw std::invalid_argument("monk_chain_count: factor out of range");
        }
        std::map<Permutation, Integer> next;
        for (const auto& [w, c] : counts) {
            for (int i = 0; i < k; ++i) {
                for (int j = k; j < size; ++j) {
                    if (bruhat_cover_swap(w, i, j)) {
                        Permutation v = w;
                        std::swap(v[i], v[j]);
                        next[std::move(v)] += c;
                    }
                }
            }
        }
        counts = std::move(next);
        if (counts.empty()) {
            return 0;
        }
    }
    auto it = counts.find(longest_permutation(size));
    return it == counts.end() ? Integer(0) : it->second;
}

inline Integer monk_chain_count(int n, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != n) {
        throw std::invalid_argument("monk_chain_count: need n exponents");
    }
    long long sum = std::accumulate(a.begin(), a.end(), 0LL);
    if (sum != static_cast<long long>(n) * (n + 1) / 2) {
        return 0;
    }
    return monk_chain_count_word(n, monk_word(a));
}

/// dim Fl_I(V) for I = {i_1 < ... < i_k} (1-based subspace sizes, bitmask
/// encoded): sum of i_j * (i_{j+1} - i_j) with i_{k+1} = n+1.
inline long long partial_flag_dimension(int n, std::uint32_t mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i) {
        if ((mask >> i) & 1u) {
            idx.push_back(i + 1);
        }
    }
    long long dim = 0;
    for (std::size_t j = 0; j < idx.size(); ++j) {
        const int next = j + 1 < idx.size() ? idx[j + 1] : n + 1;
        dim += static_cast<long long>(idx[j]) * (next - idx[j]);
    }
    return dim;
}

struct FlagSupportResult {
    int n = 0;
    LatticePointSet support;                 // exponent vectors with positive degree
    std::map<std::vector<int>, Integer> degrees; // degree at each support point
    LatticePointSet polytope_points;         // lattice points of the dimension polytope
    std::vector<long long> flag_dims;        // dim Fl_I(V), RankFunction-shaped
    bool matches_polytope = false;
};

/// Scans the whole top-degree slice, records every exponent vector with
/// positive degree, and compares against the lattice points of the polytope
/// cut out by the partial-flag dimension bounds.
inline FlagSupportResult flag_support(int n) {
    if (n < 1 || n > 4) {
        throw std::invalid_argument("flag_support: n must be in [1, 4]");
    }
    const long long total = static_cast<long long>(n) * (n + 1) / 2;

    FlagSupportResult res;
    res.n = n;
    res.support.n = n;

    std::vector<int> a(n, 0);
    auto scan = [&](auto&& self, int i, long long remaining) -> void {
        if (i == n) {
            if (remaining != 0) {
                return;
            }
            const Integer d = schubert_divisor_degree(n, a);
            if (d > 0) {
                res.support.points.insert(a);
                res.degrees.emplace(a, d);
            }
            return;
        }
        for (long long v = 0; v <= remaining; ++v) {
            a[i] = static_cast<int>(v);
            self(self, i + 1, remaining - v);
        }
        a[i] = 0;
    };
    scan(scan, 0, total);

    res.flag_dims.assign(std::size_t{1} << n, 0);
    for (std::uint32_t mask = 0; mask < res.flag_dims.size(); ++mask) {
        res.flag_dims[mask] = partial_flag_dimension(n, mask);
    }
    res.polytope_points = lattice_points_under(n, res.flag_dims);
    res.matches_polytope = res.support.points == res.polytope_points.points;
    return res;
}

} // namespace mdeg
