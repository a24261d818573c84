#pragma once

#include "mdeg/points.hpp"
#include "mdeg/rational.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mdeg {

/// Integer set function on subsets of {1..n}, stored densely: values[mask]
/// with element i on bit i-1. Candidate polymatroid or matroid rank.
struct RankFunction {
    int n = 0;
    std::vector<long long> values;

    RankFunction(int n_, std::vector<long long> values_) : n(n_), values(std::move(values_)) {
        if (n < 1 || n > 16) {
            throw std::invalid_argument("ground set size must be in [1, 16]");
        }
        if (values.size() != (std::size_t{1} << n)) {
            throw std::invalid_argument("rank function needs 2^n values");
        }
    }

    template <typename Fn>
    static RankFunction from_fn(int n, Fn&& fn) {
        std::vector<long long> v(std::size_t{1} << n);
        for (std::uint32_t mask = 0; mask < v.size(); ++mask) {
            v[mask] = fn(mask);
        }
        return RankFunction(n, std::move(v));
    }

    std::uint32_t full_mask() const { return (std::uint32_t{1} << n) - 1; }
    long long operator[](std::uint32_t mask) const { return values[mask]; }

    bool operator==(const RankFunction&) const = default;
};

inline std::string subset_to_string(std::uint32_t mask) {
    std::string s = "{";
    bool first = true;
    for (int i = 0; mask >> i; ++i) {
        if ((mask >> i) & 1u) {
            if (!first) {
                s += ",";
            }
            s += std::to_string(i + 1);
            first = false;
        }
    }
    return s + "}";
}

struct AxiomViolation {
    enum Kind { NormalizationR1, MonotoneR2, SubmodularR3, RangeR4 };
    Kind kind;
    std::uint32_t i = 0;
    std::uint32_t j = 0;

    std::string describe() const {
        switch (kind) {
            case NormalizationR1:
                return "R1: f(empty) != 0";
            case MonotoneR2:
                return "R2: f" + subset_to_string(i) + " > f" + subset_to_string(j);
            case SubmodularR3:
                return "R3: f" + subset_to_string(i & j) + " + f" + subset_to_string(i | j) +
                       " > f" + subset_to_string(i) + " + f" + subset_to_string(j);
            case RangeR4:
                return "R4: f" + subset_to_string(i) + " outside [0, |I|]";
        }
        return {};
    }
};

struct CheckResult {
    bool ok = true;
    std::vector<AxiomViolation> violations;
};

/// Checks R1 (normalization), R2 (monotone over covers), R3 (submodularity
/// over all subset pairs). Violations come back as data.
inline CheckResult check_polymatroid(const RankFunction& f) {
    CheckResult res;
    const std::uint32_t full = f.full_mask();

    if (f[0] != 0) {
        res.violations.push_back({AxiomViolation::NormalizationR1, 0, 0});
    }
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
        for (int j = 0; j < f.n; ++j) {
            const std::uint32_t bit = std::uint32_t{1} << j;
            if (!(mask & bit) && f[mask] > f[mask | bit]) {
                res.violations.push_back({AxiomViolation::MonotoneR2, mask, mask | bit});
            }
        }
    }
    for (std::uint32_t a = 0; a <= full; ++a) {
        for (std::uint32_t b = a + 1; b <= full; ++b) {
            if ((a & b) == a || (a & b) == b) {
                continue; // nested pairs hold with equality
            }
            if (f[a & b] + f[a | b] > f[a] + f[b]) {
                res.violations.push_back({AxiomViolation::SubmodularR3, a, b});
            }
        }
    }
    res.ok = res.violations.empty();
    return res;
}

/// Polymatroid axioms plus the matroid range axiom R4: 0 <= f(I) <= |I|.
inline CheckResult check_matroid(const RankFunction& f) {
    CheckResult res = check_polymatroid(f);
    for (std::uint32_t mask = 0; mask <= f.full_mask(); ++mask) {
        if (f[mask] < 0 || f[mask] > std::popcount(mask)) {
            res.violations.push_back({AxiomViolation::RangeR4, mask, 0});
        }
    }
    res.ok = res.violations.empty();
    return res;
}

/// Integer points of { t >= 0 : sum t = bound[full], sum_{i in I} t_i <=
/// bound[I] for all I }. Bounded product scan over t_i <= bound[{i}], then a
/// full inequality filter at the leaves.
inline LatticePointSet lattice_points_under(int n, const std::vector<long long>& bound) {
    if (bound.size() != (std::size_t{1} << n)) {
        throw std::invalid_argument("bound array needs 2^n entries");
    }
    const std::uint32_t full = (std::uint32_t{1} << n) - 1;
    const long long total = bound[full];

    LatticePointSet out;
    out.n = n;
    if (total < 0) {
        return out;
    }

    std::vector<int> t(n, 0);
    std::vector<long long> sums(std::size_t{1} << n, 0);
    auto admits = [&]() {
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const std::uint32_t low = mask & (0u - mask);
            const int idx = std::countr_zero(low);
            sums[mask] = sums[mask ^ low] + t[idx];
            if (sums[mask] > bound[mask]) {
                return false;
            }
        }
        return true;
    };
    auto scan = [&](auto&& self, int i, long long remaining) -> void {
        if (i == n) {
            if (remaining == 0 && admits()) {
                out.points.insert(t);
            }
            return;
        }
        const long long cap = std::min<long long>(bound[std::uint32_t{1} << i], remaining);
        for (long long v = 0; v <= cap; ++v) {
            t[i] = static_cast<int>(v);
            self(self, i + 1, remaining - v);
        }
        t[i] = 0;
    };
    scan(scan, 0, total);
    return out;
}

/// Lattice points of the base polytope of f: sum t = f([n]), subset sums
/// bounded by f. Requires a valid polymatroid.
inline LatticePointSet base_polytope_points(const RankFunction& f) {
    if (!check_polymatroid(f).ok) {
        throw std::invalid_argument("base_polytope_points: not a polymatroid rank function");
    }
    return lattice_points_under(f.n, f.values);
}

/// Greedy vertex t_i = f({1..i}) - f({1..i-1}); always a lattice point of the
/// base polytope of a valid polymatroid.
inline LatticePoint greedy_base_point(const RankFunction& f) {
    LatticePoint t(f.n);
    std::uint32_t prefix = 0;
    for (int i = 0; i < f.n; ++i) {
        const std::uint32_t next = prefix | (std::uint32_t{1} << i);
        t[i] = static_cast<int>(f[next] - f[prefix]);
        prefix = next;
    }
    return t;
}

/// Involution between dimension-form points a and codimension-form points
/// t = m*1 - a. Every coordinate must fit in its factor's box.
inline LatticePointSet codim_form(const LatticePointSet& pts, const std::vector<int>& dims) {
    if (static_cast<int>(dims.size()) != pts.n) {
        throw std::invalid_argument("codim_form: dimension vector length mismatch");
    }
    LatticePointSet out;
    out.n = pts.n;
    for (const auto& p : pts.points) {
        LatticePoint q(pts.n);
        for (int i = 0; i < pts.n; ++i) {
            if (p[i] > dims[i]) {
                throw std::domain_error("codim_form: coordinate exceeds factor dimension");
            }
            q[i] = dims[i] - p[i];
        }
        out.points.insert(std::move(q));
    }
    return out;
}

/// A support set together with its tight upper bounds u_I = max over the
/// support of the I-coordinate sum. u is RankFunction-shaped (2^n array).
struct SupportProfile {
    int n = 0;
    long long d = 0;
    LatticePointSet support;
    std::vector<long long> u;
};

inline SupportProfile u_profile(const LatticePointSet& support) {
    if (support.points.empty()) {
        throw std::invalid_argument("u_profile: empty support");
    }
    const long long d = support.common_sum();
    if (d < 0) {
        throw std::invalid_argument("u_profile: support must have constant coordinate sum");
    }
    SupportProfile profile;
    profile.n = support.n;
    profile.d = d;
    profile.support = support;
    profile.u.assign(std::size_t{1} << support.n, 0);

    std::vector<long long> sums(std::size_t{1} << support.n, 0);
    const std::uint32_t full = (std::uint32_t{1} << support.n) - 1;
    for (const auto& p : support.points) {
        for (std::uint32_t mask = 1; mask <= full; ++mask) {
            const std::uint32_t low = mask & (0u - mask);
            sums[mask] = sums[mask ^ low] + p[std::countr_zero(low)];
            profile.u[mask] = std::max(profile.u[mask], sums[mask]);
        }
    }
    return profile;
}

/// Outer lattice-point set Q of a profile: all nonnegative integer points on
/// the sum-d slice obeying every u_I bound. Contains the support.
inline LatticePointSet q_points(const SupportProfile& profile) {
    return lattice_points_under(profile.n, profile.u);
}

struct SupportTheoremResult {
    bool holds = false;
    std::optional<LatticePoint> witness; // a point of Q minus the support
    SupportProfile profile;
    LatticePointSet q;
};

/// Does the support equal the full lattice-point set of its own u-profile
/// polytope? The witness, when present, is the lex-least missing point.
inline SupportTheoremResult verify_support_theorem(const LatticePointSet& support) {
    SupportTheoremResult res;
    res.profile = u_profile(support);
    res.q = q_points(res.profile);
    res.holds = res.q.points == support.points;
    if (!res.holds) {
        for (const auto& p : res.q.points) {
            if (!support.contains(p)) {
                res.witness = p;
                break;
            }
        }
    }
    return res;
}

// ---------------------------------------------------------------------------
// Ingleton inequality
//
//   f(A|B) + f(C) + f(D) + f(A|C|D) + f(B|C|D)
//     <= f(A|C) + f(A|D) + f(B|C) + f(B|D) + f(C|D)
//
// holds for every rank function coming from a subspace arrangement. A
// violated instance certifies non-representability.
// ---------------------------------------------------------------------------

enum class IngletonMode { Elements, Subsets };

struct IngletonViolation {
    std::array<std::uint32_t, 4> slots; // subset bitmasks A, B, C, D
    long long lhs = 0;
    long long rhs = 0;

    std::string describe() const {
        return "ingleton violated at (" + subset_to_string(slots[0]) + ", " +
               subset_to_string(slots[1]) + ", " + subset_to_string(slots[2]) + ", " +
               subset_to_string(slots[3]) + "): " + std::to_string(lhs) + " > " +
               std::to_string(rhs);
    }
};

namespace detail {

inline void ingleton_eval(const RankFunction& f, std::uint32_t a, std::uint32_t b,
                          std::uint32_t c, std::uint32_t d,
                          std::vector<IngletonViolation>& out) {
    const long long lhs = f[a | b] + f[c] + f[d] + f[a | c | d] + f[b | c | d];
    const long long rhs = f[a | c] + f[a | d] + f[b | c] + f[b | d] + f[c | d];
    if (lhs > rhs) {
        out.push_back({{a, b, c, d}, lhs, rhs});
    }
}

} // namespace detail

/// Scans the Ingleton inequality. Elements mode assigns four distinct ground
/// elements to the slots; subsets mode ranges over 4-tuples of pairwise
/// disjoint nonempty subsets (n <= 8). Both deduplicate the A<->B and C<->D
/// slot symmetries. Note that on a matroid, elements mode never fires: the
/// restriction to four elements is a four-element matroid, and those are all
/// representable. Detecting non-representable matroids needs subsets mode.
inline std::vector<IngletonViolation> ingleton_check(const RankFunction& f,
                                                     IngletonMode mode = IngletonMode::Elements) {
    std::vector<IngletonViolation> out;
    if (f.n < 4) {
        return out;
    }
    if (mode == IngletonMode::Elements) {
        for (int w = 0; w < f.n; ++w) {
            for (int x = w + 1; x < f.n; ++x) {
                for (int y = 0; y < f.n; ++y) {
                    if (y == w || y == x) {
                        continue;
                    }
                    for (int z = y + 1; z < f.n; ++z) {
                        if (z == w || z == x) {
                            continue;
                        }
                        detail::ingleton_eval(f, 1u << w, 1u << x, 1u << y, 1u << z, out);
                    }
                }
            }
        }
        return out;
    }

    if (f.n > 8) {
        throw std::invalid_argument("ingleton_check: subsets mode is limited to n <= 8");
    }
    const std::uint32_t full = f.full_mask();
    for (std::uint32_t a = 1; a <= full; ++a) {
        const std::uint32_t rest_a = full & ~a;
        for (std::uint32_t b = rest_a; b; b = (b - 1) & rest_a) {
            if (b <= a) {
                continue; // A<->B symmetry
            }
            const std::uint32_t rest_ab = rest_a & ~b;
            for (std::uint32_t c = rest_ab; c; c = (c - 1) & rest_ab) {
                const std::uint32_t rest_abc = rest_ab & ~c;
                for (std::uint32_t d = rest_abc; d; d = (d - 1) & rest_abc) {
                    if (d <= c) {
                        continue; // C<->D symmetry
                    }
                    detail::ingleton_eval(f, a, b, c, d, out);
                }
            }
        }
    }
    return out;
}

/// Known necessary conditions for linear representability, by ground-set
/// size. For n <= 3 the polymatroid axioms already cut out the representable
/// cone; for n = 4 they do together with Ingleton; from n = 5 on further
/// inequalities exist that this library does not encode, so passing Ingleton
/// is merely inconclusive.
enum class Frontier { ConsistentRepresentable, NecessaryConditionsFail, Inconclusive };

inline const char* to_string(Frontier v) {
    switch (v) {
        case Frontier::ConsistentRepresentable:
            return "consistent-representable";
        case Frontier::NecessaryConditionsFail:
            return "necessary-conditions-fail";
        case Frontier::Inconclusive:
            return "inconclusive";
    }
    return "";
}

inline Frontier representability_frontier(const RankFunction& f) {
    if (!check_polymatroid(f).ok) {
        throw std::invalid_argument("representability_frontier: not a polymatroid rank function");
    }
    if (f.n <= 3) {
        return Frontier::ConsistentRepresentable;
    }
    bool violated = !ingleton_check(f, IngletonMode::Elements).empty();
    if (!violated && f.n <= 8) {
        violated = !ingleton_check(f, IngletonMode::Subsets).empty();
    }
    if (f.n == 4) {
        return violated ? Frontier::NecessaryConditionsFail : Frontier::ConsistentRepresentable;
    }
    return violated ? Frontier::NecessaryConditionsFail : Frontier::Inconclusive;
}

// Text format: header "rankfn n", then 2^n lines "bitmask value" in
// increasing bitmask order.

inline RankFunction parse_rankfn(std::istream& in) {
    std::istringstream header(next_data_line(in));
    std::string tag;
    int n = 0;
    if (!(header >> tag >> n) || tag != "rankfn" || n < 1 || n > 16) {
        throw ParseError("rankfn header must be 'rankfn n' with 1 <= n <= 16");
    }
    std::vector<long long> values(std::size_t{1} << n);
    for (std::uint32_t mask = 0; mask < values.size(); ++mask) {
        std::istringstream row(next_data_line(in));
        std::uint32_t stated = 0;
        long long value = 0;
        if (!(row >> stated >> value) || stated != mask) {
            throw ParseError("rankfn line " + std::to_string(mask) +
                             " must be '" + std::to_string(mask) + " value'");
        }
        values[mask] = value;
    }
    return RankFunction(n, std::move(values));
}

inline void print_rankfn(std::ostream& out, const RankFunction& f) {
    out << "rankfn " << f.n << '\n';
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << f.n); ++mask) {
        out << mask << ' ' << f[mask] << '\n';
    }
}

inline std::string rankfn_to_string(const RankFunction& f) {
    std::ostringstream out;
    print_rankfn(out, f);
    return out.str();
}

} // namespace mdeg
