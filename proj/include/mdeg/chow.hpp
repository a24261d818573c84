#pragma once

#include "mdeg/points.hpp"
#include "mdeg/rational.hpp"

#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace mdeg {

/// Product of projective spaces P^{m_1} x ... x P^{m_n}.
struct Ambient {
    int n = 0;
    std::vector<int> dims;

    Ambient() = default;

    Ambient(int n_, std::vector<int> dims_) : n(n_), dims(std::move(dims_)) {
        if (n < 1 || static_cast<int>(dims.size()) != n) {
            throw std::invalid_argument("ambient needs n >= 1 factor dimensions");
        }
        for (int m : dims) {
            if (m < 1) {
                throw std::invalid_argument("ambient factor dimensions must be >= 1");
            }
        }
    }

    /// All factors of equal dimension m.
    static Ambient uniform(int n, int m) { return Ambient(n, std::vector<int>(n, m)); }

    bool operator==(const Ambient&) const = default;
};

/// Element of Z[H_1..H_n] / (H_i^{m_i+1}): a sparse integer combination of
/// monomials in the pulled-back hyperplane classes. Exponent vectors are
/// stored in codimension form; nothing at or beyond H_i^{m_i+1} survives and
/// zero coefficients are never kept.
class MultiClass {
public:
    using TermMap = std::map<std::vector<int>, Integer>;

    explicit MultiClass(Ambient ambient) : ambient_(std::move(ambient)) {}

    const Ambient& ambient() const { return ambient_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    static MultiClass one(const Ambient& ambient) {
        MultiClass c(ambient);
        c.add_term(std::vector<int>(ambient.n, 0), 1);
        return c;
    }

    static MultiClass monomial(const Ambient& ambient, const std::vector<int>& expo,
                               const Integer& coeff = 1) {
        MultiClass c(ambient);
        c.add_term(expo, coeff);
        return c;
    }

    /// Adds coeff * H^expo, merging with an existing term. Exponents outside
    /// the box [0, m_i] are rejected, not truncated; use multiply for ring
    /// arithmetic.
    void add_term(const std::vector<int>& expo, const Integer& coeff) {
        if (static_cast<int>(expo.size()) != ambient_.n) {
            throw std::invalid_argument("exponent length does not match ambient");
        }
        for (int i = 0; i < ambient_.n; ++i) {
            if (expo[i] < 0 || expo[i] > ambient_.dims[i]) {
                throw std::invalid_argument("exponent outside [0, m_i]");
            }
        }
        if (coeff == 0) {
            return;
        }
        auto it = terms_.find(expo);
        if (it == terms_.end()) {
            terms_.emplace(expo, coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    MultiClass& operator+=(const MultiClass& other) {
        require_same_ambient(other);
        for (const auto& [expo, coeff] : other.terms_) {
            add_term(expo, coeff);
        }
        return *this;
    }

    bool operator==(const MultiClass&) const = default;

    void require_same_ambient(const MultiClass& other) const {
        if (!(ambient_ == other.ambient_)) {
            throw std::invalid_argument("ambient mismatch");
        }
    }

private:
    Ambient ambient_;
    TermMap terms_;
};

/// Ring product: convolve exponents, drop anything past a factor's top power
/// (H_i^{m_i+1} = 0), drop cancelled terms.
inline MultiClass multiply(const MultiClass& f, const MultiClass& g) {
    f.require_same_ambient(g);
    const Ambient& ambient = f.ambient();
    MultiClass out(ambient);
    for (const auto& [ea, ca] : f.terms()) {
        for (const auto& [eb, cb] : g.terms()) {
            std::vector<int> e(ambient.n);
            bool truncated = false;
            for (int i = 0; i < ambient.n; ++i) {
                e[i] = ea[i] + eb[i];
                if (e[i] > ambient.dims[i]) {
                    truncated = true;
                    break;
                }
            }
            if (!truncated) {
                out.add_term(e, ca * cb);
            }
        }
    }
    return out;
}

/// Coefficient of the point class H_1^{m_1}...H_n^{m_n}.
inline Integer degree(const MultiClass& f) {
    auto it = f.terms().find(f.ambient().dims);
    return it == f.terms().end() ? Integer(0) : it->second;
}

/// Multidegree at a codimension-form exponent t: the stored coefficient,
/// equal to degree(f * prod H_i^{m_i - t_i}).
inline Integer multidegree_codim(const MultiClass& f, const std::vector<int>& t) {
    if (static_cast<int>(t.size()) != f.ambient().n) {
        throw std::invalid_argument("exponent length does not match ambient");
    }
    auto it = f.terms().find(t);
    return it == f.terms().end() ? Integer(0) : it->second;
}

/// Multidegree at a dimension-form point a (a = m*1 - t).
inline Integer multidegree_dim(const MultiClass& f, const std::vector<int>& a) {
    const Ambient& ambient = f.ambient();
    if (static_cast<int>(a.size()) != ambient.n) {
        throw std::invalid_argument("exponent length does not match ambient");
    }
    std::vector<int> t(ambient.n);
    for (int i = 0; i < ambient.n; ++i) {
        t[i] = ambient.dims[i] - a[i];
        if (t[i] < 0 || t[i] > ambient.dims[i]) {
            return 0;
        }
    }
    return multidegree_codim(f, t);
}

/// Shared coordinate sum of all exponents, if there is one. The zero class
/// is vacuously homogeneous of degree 0.
inline std::optional<long long> is_homogeneous(const MultiClass& f) {
    long long deg = 0;
    bool first = true;
    for (const auto& [expo, coeff] : f.terms()) {
        const long long s = std::accumulate(expo.begin(), expo.end(), 0LL);
        if (first) {
            deg = s;
            first = false;
        } else if (s != deg) {
            return std::nullopt;
        }
    }
    return deg;
}

inline bool is_effective(const MultiClass& f) {
    for (const auto& [expo, coeff] : f.terms()) {
        if (coeff <= 0) {
            return false;
        }
    }
    return true;
}

/// Multidegree support: exponent vectors (codimension form) with nonzero
/// coefficient. Meaningful for homogeneous effective classes; callers that
/// accept arbitrary input should check those predicates and warn.
inline LatticePointSet msupp(const MultiClass& f) {
    LatticePointSet s;
    s.n = f.ambient().n;
    for (const auto& [expo, coeff] : f.terms()) {
        s.points.insert(expo);
    }
    return s;
}

// Text format: header "chowclass n m1 ... mn", then one term per line as
// "coefficient e1 ... en", lex-sorted on the exponent vector when printed.

inline MultiClass parse_chowclass(std::istream& in) {
    std::istringstream header(next_data_line(in));
    std::string tag;
    int n = 0;
    if (!(header >> tag >> n) || tag != "chowclass" || n < 1) {
        throw ParseError("chowclass header must be 'chowclass n m1 ... mn'");
    }
    std::vector<int> dims(n);
    for (int i = 0; i < n; ++i) {
        if (!(header >> dims[i]) || dims[i] < 1) {
            throw ParseError("chowclass header must list n factor dimensions >= 1");
        }
    }
    MultiClass f{Ambient(n, dims)};
    for (std::string line = next_data_line(in); !line.empty(); line = next_data_line(in)) {
        std::istringstream term(line);
        std::string coeff_token;
        term >> coeff_token;
        Integer coeff;
        try {
            coeff = Integer(coeff_token);
        } catch (const std::runtime_error&) {
            throw ParseError("bad coefficient '" + coeff_token + "'");
        }
        if (coeff == 0) {
            throw ParseError("zero coefficient stored in chowclass term");
        }
        std::vector<int> expo(n);
        for (int i = 0; i < n; ++i) {
            if (!(term >> expo[i])) {
                throw ParseError("chowclass term is short: '" + line + "'");
            }
        }
        if (f.terms().count(expo)) {
            throw ParseError("duplicate exponent vector in chowclass");
        }
        try {
            f.add_term(expo, coeff);
        } catch (const std::invalid_argument& e) {
            throw ParseError(std::string("chowclass term out of range: ") + e.what());
        }
    }
    return f;
}

inline void print_chowclass(std::ostream& out, const MultiClass& f) {
    out << "chowclass " << f.ambient().n;
    for (int m : f.ambient().dims) {
        out << ' ' << m;
    }
    out << '\n';
    for (const auto& [expo, coeff] : f.terms()) {
        out << coeff;
        for (int e : expo) {
            out << ' ' << e;
        }
        out << '\n';
    }
}

inline std::string chowclass_to_string(const MultiClass& f) {
    std::ostringstream out;
    print_chowclass(out, f);
    return out.str();
}

} // namespace mdeg
