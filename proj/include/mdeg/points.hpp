#pragma once

#include "mdeg/rational.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace mdeg {

using LatticePoint = std::vector<int>;

/// Finite set of nonnegative integer vectors in Z^n, kept lex-sorted by the
/// underlying std::set so that serialization is canonical.
struct LatticePointSet {
    int n = 0;
    std::set<LatticePoint> points;

    bool operator==(const LatticePointSet&) const = default;

    bool contains(const LatticePoint& p) const { return points.count(p) > 0; }

    void insert(LatticePoint p) {
        if (static_cast<int>(p.size()) != n) {
            throw std::invalid_argument("lattice point has wrong length");
        }
        points.insert(std::move(p));
    }

    /// Common coordinate sum, or -1 if the set is empty or mixed-sum.
    long long common_sum() const {
        long long d = -1;
        for (const auto& p : points) {
            const long long s = std::accumulate(p.begin(), p.end(), 0LL);
            if (d == -1) {
                d = s;
            } else if (d != s) {
                return -1;
            }
        }
        return d;
    }
};

// Text format: header "points n d count" (d = common coordinate sum, -1 when
// mixed), then one lex-sorted point per line.

inline LatticePointSet parse_points(std::istream& in) {
    std::istringstream header(next_data_line(in));
    std::string tag;
    int n = 0;
    long long d = 0;
    long long count = 0;
    if (!(header >> tag >> n >> d >> count) || tag != "points" || n < 1 || count < 0) {
        throw ParseError("points header must be 'points n d count'");
    }
    LatticePointSet set;
    set.n = n;
    for (long long i = 0; i < count; ++i) {
        std::istringstream row(next_data_line(in));
        LatticePoint p(n);
        long long sum = 0;
        for (int c = 0; c < n; ++c) {
            if (!(row >> p[c]) || p[c] < 0) {
                throw ParseError("point row " + std::to_string(i + 1) + " is malformed");
            }
            sum += p[c];
        }
        if (d >= 0 && sum != d) {
            throw ParseError("point row " + std::to_string(i + 1) + " has coordinate sum " +
                             std::to_string(sum) + ", expected " + std::to_string(d));
        }
        set.points.insert(std::move(p));
    }
    if (static_cast<long long>(set.points.size()) != count) {
        throw ParseError("points file contains duplicate rows");
    }
    return set;
}

inline void print_points(std::ostream& out, const LatticePointSet& set) {
    out << "points " << set.n << ' ' << set.common_sum() << ' ' << set.points.size() << '\n';
    for (const auto& p : set.points) {
        for (int c = 0; c < set.n; ++c) {
            out << (c ? " " : "") << p[c];
        }
        out << '\n';
    }
}

inline std::string points_to_string(const LatticePointSet& set) {
    std::ostringstream out;
    print_points(out, set);
    return out.str();
}

} // namespace mdeg
